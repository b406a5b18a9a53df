#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lcslab/ncalg.hpp"

#include <random>

using namespace lcslab;
using namespace lcslab::ncalg;

namespace {

NcPoly x() { return NcPoly::generator(2, 0); }
NcPoly y() { return NcPoly::generator(2, 1); }

Word w(std::initializer_list<int> letters)
{
    Word r;
    for (int l : letters) r.letters.push_back((std::uint8_t)l);
    return r;
}

NcPoly random_poly(std::mt19937& rng, int ngens, int max_terms, int max_len)
{
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> letter(0, ngens - 1);
    std::uniform_int_distribution<int> coeff(-4, 4);
    NcPoly p(ngens);
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        Word word;
        int l = len(rng);
        for (int j = 0; j < l; ++j) word.letters.push_back((std::uint8_t)letter(rng));
        p.add_term(word, Rat(coeff(rng)));
    }
    return p;
}

// independent contiguous-subword scanner used as the oracle for the reducer
bool oracle_has_power(const Word& word, int gen, int power)
{
    if ((int)word.size() < power) return false;
    for (std::size_t start = 0; start + power <= word.size(); ++start) {
        bool all = true;
        for (int i = 0; i < power; ++i)
            if (word.letters[start + i] != gen) {
                all = false;
                break;
            }
        if (all) return true;
    }
    return false;
}

} // namespace

TEST_CASE("product of generators and unit")
{
    CHECK(mul(x(), y()) == NcPoly::monomial(2, w({0, 1})));
    std::mt19937 rng(1);
    NcPoly p = random_poly(rng, 2, 5, 4);
    CHECK(mul(p, NcPoly::one(2)) == p);
    CHECK(mul(NcPoly::one(2), p) == p);
}

TEST_CASE("distributivity keeps noncommutativity")
{
    NcPoly lhs = mul(x() + y(), x() - y());
    NcPoly want(2);
    want.add_term(w({0, 0}), Rat(1));
    want.add_term(w({0, 1}), Rat(-1));
    want.add_term(w({1, 0}), Rat(1));
    want.add_term(w({1, 1}), Rat(-1));
    CHECK(lhs == want);
}

TEST_CASE("bracket definition and alternation")
{
    NcPoly b = bracket(x(), y());
    NcPoly want(2);
    want.add_term(w({0, 1}), Rat(1));
    want.add_term(w({1, 0}), Rat(-1));
    CHECK(b == want);

    std::mt19937 rng(2);
    for (int i = 0; i < 20; ++i) {
        NcPoly p = random_poly(rng, 2, 4, 3);
        CHECK(bracket(p, p).is_zero());
    }

    // [x^2, y] has exactly the two words xxy and yxx
    NcPoly b2 = bracket(mul(x(), x()), y());
    NcPoly want2(2);
    want2.add_term(w({0, 0, 1}), Rat(1));
    want2.add_term(w({1, 0, 0}), Rat(-1));
    CHECK(b2 == want2);
}

TEST_CASE("mul is associative and bilinear on random inputs")
{
    std::mt19937 rng(3);
    for (int i = 0; i < 30; ++i) {
        NcPoly a = random_poly(rng, 2, 4, 3);
        NcPoly b = random_poly(rng, 2, 4, 3);
        NcPoly c = random_poly(rng, 2, 4, 3);
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        CHECK(mul(a + b, c) == mul(a, c) + mul(b, c));
        CHECK(mul(a, b + c) == mul(a, b) + mul(a, c));
    }
    CHECK_THROWS_AS(mul(NcPoly::one(2), NcPoly::one(3)), std::invalid_argument);
}

TEST_CASE("Jacobi identity on random cubic inputs")
{
    std::mt19937 rng(4);
    for (int i = 0; i < 25; ++i) {
        NcPoly p = random_poly(rng, 2, 3, 3);
        NcPoly q = random_poly(rng, 2, 3, 3);
        NcPoly r = random_poly(rng, 2, 3, 3);
        NcPoly jac = bracket(bracket(p, q), r) + bracket(bracket(q, r), p) +
                     bracket(bracket(r, p), q);
        CHECK(jac.is_zero());
    }
}

TEST_CASE("iterated bracket builders")
{
    // b_{0,0,1} = [y, [x, y]]
    CHECK(build_b(1, 0, 0, 1) == bracket(y(), bracket(x(), y())));
    // b_{r-1,1} = ad_x^{r-1} [x, y], multidegree (r, 1)
    for (int r = 1; r <= 5; ++r) {
        NcPoly b = build_b2(1, r - 1, 1);
        REQUIRE(b.multidegree());
        CHECK(*b.multidegree() == MultiDegree{r, 1});
        CHECK(!b.is_zero());
    }
    // multidegree of build_b(1, i, j, k) is (i+j+k, 2)
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j)
            for (int k = 1; k <= 2; ++k) {
                NcPoly b = build_b(1, i, j, k);
                REQUIRE(b.multidegree());
                CHECK(*b.multidegree() == MultiDegree{i + j + k, 2});
            }
    // c_{a,b,i,j} sits in multidegree (a+i, b+j)
    NcPoly c = build_c(2, 1, 1, 2);
    REQUIRE(c.multidegree());
    CHECK(*c.multidegree() == MultiDegree{3, 3});
    CHECK_THROWS_AS(build_b(0, 0, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_b(1, 0, 0, 0), std::invalid_argument);
}

TEST_CASE("partial derivative")
{
    // d/dx (xyx) = yx + xy
    NcPoly p = NcPoly::monomial(2, w({0, 1, 0}));
    NcPoly want(2);
    want.add_term(w({1, 0}), Rat(1));
    want.add_term(w({0, 1}), Rat(1));
    CHECK(partial(p, 0) == want);

    std::mt19937 rng(5);
    for (int i = 0; i < 25; ++i) {
        NcPoly a = random_poly(rng, 2, 4, 3);
        NcPoly b = random_poly(rng, 2, 4, 3);
        for (int g = 0; g < 2; ++g)
            CHECK(partial(mul(a, b), g) ==
                  mul(partial(a, g), b) + mul(a, partial(b, g)));
    }
}

TEST_CASE("gl action")
{
    CHECK(gl_action(0, 1, y()) == x());
    // highest-weight annihilation: E_{12} [x^{l-1}, y] = 0
    for (int l = 2; l <= 6; ++l) {
        NcPoly b = bracket(NcPoly::monomial(2, Word(std::vector<std::uint8_t>(l - 1, 0))), y());
        CHECK(gl_action(0, 1, b).is_zero());
    }
    // diagonal action scales by the occurrence count
    NcPoly word = NcPoly::monomial(2, w({0, 1, 0}));
    CHECK(gl_action(0, 0, word) == Rat(2) * word);
    CHECK(gl_action(1, 1, word) == word);

    std::mt19937 rng(6);
    for (int i = 0; i < 20; ++i) {
        NcPoly a = random_poly(rng, 2, 3, 3);
        NcPoly b = random_poly(rng, 2, 3, 3);
        CHECK(gl_action(0, 1, mul(a, b)) ==
              mul(gl_action(0, 1, a), b) + mul(a, gl_action(0, 1, b)));
    }
}

TEST_CASE("monomial quotient reduction")
{
    std::vector<int> powers{2, 2};
    NcPoly p = NcPoly::monomial(2, w({0, 1, 0}));
    CHECK(monomial_quotient_reduce(p, powers) == p);
    NcPoly q = NcPoly::monomial(2, w({0, 0, 1}));
    CHECK(monomial_quotient_reduce(q, powers).is_zero());
    CHECK_THROWS_AS(monomial_quotient_reduce(p, {2}), std::invalid_argument);
    CHECK_THROWS_AS(monomial_quotient_reduce(p, {0, 2}), std::invalid_argument);
}

TEST_CASE("reduced component counts agree with the subword oracle")
{
    std::vector<int> powers{2, 2};
    // words of multidegree (2,1) surviving x^2 = y^2 = 0
    auto words = words_of_multidegree({2, 1});
    int survivors = 0;
    for (const Word& word : words) {
        bool forb = oracle_has_power(word, 0, 2) || oracle_has_power(word, 1, 2);
        CHECK(forb == word_contains_forbidden_power(word, powers));
        if (!forb) ++survivors;
    }
    CHECK(survivors == 1); // only xyx
}

TEST_CASE("reduction is idempotent and multiplicative up to reduction")
{
    std::mt19937 rng(7);
    std::vector<int> powers{2, 3};
    for (int i = 0; i < 30; ++i) {
        NcPoly a = random_poly(rng, 2, 4, 4);
        NcPoly b = random_poly(rng, 2, 4, 4);
        NcPoly ra = monomial_quotient_reduce(a, powers);
        CHECK(monomial_quotient_reduce(ra, powers) == ra);
        NcPoly rb = monomial_quotient_reduce(b, powers);
        CHECK(monomial_quotient_reduce(mul(a, b), powers) ==
              monomial_quotient_reduce(mul(ra, rb), powers));
    }
}

TEST_CASE("word enumeration")
{
    CHECK(words_of_multidegree({2, 1}).size() == 3);
    CHECK(words_of_multidegree({0, 0}).size() == 1);
    CHECK(words_of_total_degree(2, 3).size() == 8);
    CHECK(words_of_total_degree(3, 0).size() == 1);
    // lex order within a multidegree
    auto ws = words_of_multidegree({1, 1});
    REQUIRE(ws.size() == 2);
    CHECK(ws[0] == w({0, 1}));
    CHECK(ws[1] == w({1, 0}));
}

TEST_CASE("permutation family row order")
{
    auto p2 = pn_row_order(2);
    REQUIRE(p2.size() == 1);
    CHECK(p2[0] == std::vector<int>{1, 2});

    auto p3 = pn_row_order(3);
    REQUIRE(p3.size() == 2);
    CHECK(p3[0] == std::vector<int>{1, 2, 3});
    CHECK(p3[1] == std::vector<int>{1, 3, 2});

    auto p4 = pn_row_order(4);
    REQUIRE(p4.size() == 4);
    CHECK(p4[0] == std::vector<int>{1, 2, 3, 4});
    CHECK(p4[1] == std::vector<int>{1, 3, 2, 4});
    CHECK(p4[2] == std::vector<int>{1, 2, 4, 3});
    CHECK(p4[3] == std::vector<int>{1, 3, 4, 2});
}
