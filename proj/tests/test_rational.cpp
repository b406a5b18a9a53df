#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lcslab/rational.hpp"

#include <random>

#ifdef LCSLAB_HAVE_GMP
#include <gmpxx.h>
#endif

using lcslab::Int;
using lcslab::Rat;

TEST_CASE("small integer arithmetic")
{
    CHECK(Int(2) + Int(3) == Int(5));
    CHECK(Int(-7) * Int(6) == Int(-42));
    CHECK(Int(7) / Int(2) == Int(3));
    CHECK(Int(7) % Int(2) == Int(1));
    CHECK(Int(-7) / Int(2) == Int(-3));
    CHECK(Int(-7) % Int(2) == Int(-1));
    CHECK(Int::gcd(Int(12), Int(-18)) == Int(6));
    CHECK(Int::gcd(Int(0), Int(0)) == Int(0));
    CHECK(Int::pow(Int(3), 7) == Int(2187));
    CHECK(Int(0).sign() == 0);
    CHECK((-Int(5)).sign() == -1);
}

TEST_CASE("promotion around the int64 boundary")
{
    Int big = Int::pow(Int(2), 62);
    CHECK(big.fits_int64());
    Int bigger = big + big; // 2^63
    CHECK(!bigger.fits_int64());
    CHECK(bigger - big == big);
    CHECK((bigger / Int(2)) == big);
    CHECK(bigger.to_string() == "9223372036854775808");
    CHECK(Int::from_string("-9223372036854775808").to_string() == "-9223372036854775808");

    Int huge = Int::pow(Int(10), 30);
    CHECK(huge.to_string() == "1000000000000000000000000000000");
    CHECK(huge / Int::pow(Int(10), 15) == Int::pow(Int(10), 15));
    CHECK(Int::from_string(huge.to_string()) == huge);
}

TEST_CASE("string parsing errors")
{
    CHECK_THROWS_AS(Int::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(Int::from_string("12a"), std::invalid_argument);
    CHECK_THROWS_AS(Rat(Int(1), Int(0)), std::domain_error);
}

TEST_CASE("rational normal form")
{
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-2, -4) == Rat(1, 2));
    CHECK(Rat(2, -4) == Rat(-1, 2));
    CHECK(Rat(0, 17) == Rat());
    CHECK((Rat(1, 3) + Rat(1, 6)) == Rat(1, 2));
    CHECK((Rat(1, 3) * Rat(3, 5)) == Rat(1, 5));
    CHECK((Rat(1, 3) / Rat(1, 6)) == Rat(2));
    CHECK(Rat(7, 3).to_string() == "7/3");
    CHECK(Rat(-4, 2).to_string() == "-2");
    CHECK(Rat::from_string("-6/8") == Rat(-3, 4));
    CHECK(Rat(1, 2) < Rat(2, 3));
    CHECK(Rat(-1, 2) < Rat(1, 3));
}

#ifdef LCSLAB_HAVE_GMP
namespace {

mpz_class to_gmp(const Int& v) { return mpz_class(v.to_string()); }

Int random_int(std::mt19937& rng, int max_limbs)
{
    std::uniform_int_distribution<int> limbs(0, max_limbs);
    std::uniform_int_distribution<std::uint32_t> word;
    std::uniform_int_distribution<int> sign(0, 1);
    int n = limbs(rng);
    Int v(0);
    for (int i = 0; i < n; ++i) v = v * Int(1ll << 32) + Int((long long)word(rng));
    if (sign(rng)) v = -v;
    return v;
}

} // namespace

TEST_CASE("randomized arithmetic agrees with GMP")
{
    std::mt19937 rng(20240817);
    for (int iter = 0; iter < 4000; ++iter) {
        Int a = random_int(rng, 3);
        Int b = random_int(rng, 3);
        mpz_class ga = to_gmp(a), gb = to_gmp(b);
        CHECK(to_gmp(a + b) == ga + gb);
        CHECK(to_gmp(a - b) == ga - gb);
        CHECK(to_gmp(a * b) == ga * gb);
        CHECK(to_gmp(Int::gcd(a, b)) == mpz_class(gcd(ga, gb)));
        if (!b.is_zero()) {
            Int q, r;
            Int::divmod(a, b, q, r);
            mpz_class gq, gr;
            mpz_tdiv_qr(gq.get_mpz_t(), gr.get_mpz_t(), ga.get_mpz_t(), gb.get_mpz_t());
            CHECK(to_gmp(q) == gq);
            CHECK(to_gmp(r) == gr);
        }
        int cmp = Int::cmp(a, b);
        int gcmp = ::cmp(ga, gb);
        CHECK((cmp < 0) == (gcmp < 0));
        CHECK((cmp == 0) == (gcmp == 0));
    }
}

TEST_CASE("randomized rational arithmetic agrees with GMP")
{
    std::mt19937 rng(7177);
    auto random_rat = [&](void) {
        Int n = random_int(rng, 2);
        Int d = random_int(rng, 1);
        if (d.is_zero()) d = Int(1);
        return Rat(n, d);
    };
    for (int iter = 0; iter < 2000; ++iter) {
        Rat a = random_rat(), b = random_rat();
        mpq_class ga(a.to_string()), gb(b.to_string());
        ga.canonicalize();
        gb.canonicalize();
        mpq_class sum = ga + gb, prod = ga * gb;
        sum.canonicalize();
        prod.canonicalize();
        CHECK(mpq_class((a + b).to_string()) == sum);
        CHECK(mpq_class((a * b).to_string()) == prod);
        if (!b.is_zero()) {
            mpq_class quot = ga / gb;
            quot.canonicalize();
            CHECK(mpq_class((a / b).to_string()) == quot);
        }
    }
}
#endif
