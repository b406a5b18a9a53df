#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lcslab/charmod.hpp"

using namespace lcslab;
using namespace lcslab::charmod;

TEST_CASE("character of the smallest module")
{
    // F(1,1) has coefficient 1 at every (a,b) with a,b >= 1
    auto f = char_F(1, 1, 8);
    for (int a = 0; a <= 8; ++a)
        for (int b = 0; a + b <= 8; ++b)
            CHECK(f.coeff(a, b) == ((a >= 1 && b >= 1) ? 1 : 0));
    CHECK_THROWS_AS(char_F(1, 2, 8), std::invalid_argument);
    CHECK_THROWS_AS(char_F(2, 0, 8), std::invalid_argument);
}

TEST_CASE("column patterns of the two-row characters")
{
    // dim F(p,1)[r,1] = 0 for r <= p-1 and 1 for r >= p
    for (int p = 1; p <= 5; ++p) {
        auto f = char_F(p, 1, 9);
        for (int r = 1; r <= 8; ++r) CHECK(f.coeff(r, 1) == (r >= p ? 1 : 0));
    }
    // dim F(m-1,1)[r,2] = 0 / 1 / 2 for r <= m-3 / r = m-2 / r >= m-1
    for (int m = 3; m <= 6; ++m) {
        auto f = char_F(m - 1, 1, 9);
        for (int r = 1; r <= 7; ++r) {
            long long want = r <= m - 3 ? 0 : (r == m - 2 ? 1 : 2);
            CHECK(f.coeff(r, 2) == want);
        }
    }
    // dim F(p,2)[r,2] = 0 for r <= p-1 and 1 for r >= p
    for (int p = 2; p <= 5; ++p) {
        auto f = char_F(p, 2, 9);
        for (int r = 2; r <= 7; ++r) CHECK(f.coeff(r, 2) == (r >= p ? 1 : 0));
    }
}

TEST_CASE("multiplying by (1-s)(1-t) leaves one antidiagonal segment")
{
    for (int p = 1; p <= 4; ++p)
        for (int k = 1; k <= p; ++k) {
            auto f = char_F(p, k, 10);
            auto c = [&](int a, int b) { return a < 0 || b < 0 ? 0 : f.coeff(a, b); };
            for (int a = 0; a <= 8; ++a)
                for (int b = 0; a + b <= 8; ++b) {
                    long long v = c(a, b) - c(a - 1, b) - c(a, b - 1) + c(a - 1, b - 1);
                    bool on_segment = (a + b == p + k) && a >= k && a <= p;
                    CHECK(v == (on_segment ? 1 : 0));
                }
        }
}

TEST_CASE("characters of the series quotients")
{
    lcs::Engine eng;
    auto b1 = char_B(eng, 1, 6);
    CHECK(b1.coeff(0, 0) == 1);
    CHECK(b1.coeff(3, 0) == 1);  // cyclic words in one letter
    CHECK(b1.coeff(2, 2) == 2);  // xxyy and xyxy up to rotation

    auto b2 = char_B(eng, 2, 7);
    for (int a = 0; a <= 7; ++a)
        for (int b = 0; a + b <= 7; ++b)
            CHECK(b2.coeff(a, b) == ((a >= 1 && b >= 1) ? 1 : 0));
    CHECK(b2.symmetric());

    auto b3 = char_B(eng, 3, 7);
    CHECK(b3.symmetric());
    CHECK(b3 == char_F(2, 1, 7));
}

TEST_CASE("character rows match the series structure theorems")
{
    lcs::Engine eng;
    for (int m = 3; m <= 5; ++m) {
        auto bm = char_B(eng, m, 8);
        for (int r = 1; r + 1 <= 8; ++r)
            CHECK(bm.coeff(r, 1) == (r >= m - 1 ? 1 : 0));
        for (int r = 1; r + 2 <= 8; ++r) {
            long long want = m <= r + 1 ? m - 1 : (m == r + 2 ? (r + 1) / 2 : 0);
            CHECK(bm.coeff(r, 2) == want);
        }
        CHECK(bm.symmetric());
    }
}

TEST_CASE("decompose recovers single modules")
{
    for (int p = 1; p <= 4; ++p)
        for (int k = 1; k <= p; ++k) {
            if (p + k > 8) continue;
            auto d = decompose(char_F(p, k, 10));
            REQUIRE(d.multiplicities.size() == 1);
            CHECK(d.multiplicity(p, k) == 1);
            CHECK(d.certified_total == 8);
        }
}

TEST_CASE("decompose handles sums and scalar multiples")
{
    auto series = char_F(3, 1, 10) + char_F(3, 2, 10) + char_F(3, 2, 10) + char_F(2, 2, 10);
    auto d = decompose(series);
    CHECK(d.multiplicity(3, 1) == 1);
    CHECK(d.multiplicity(3, 2) == 2);
    CHECK(d.multiplicity(2, 2) == 1);
    CHECK(d.multiplicities.size() == 3);
}

TEST_CASE("decompose rejects inputs outside the dictionary")
{
    // a negative combination
    auto bad = char_F(2, 1, 10) - char_F(2, 2, 10);
    CHECK_THROWS_AS(decompose(bad), DecompositionError);
    // a one-row-like series: nonzero on an axis, not coverable
    CharSeries axis(10);
    for (int a = 1; a <= 10; ++a) axis.set_coeff(a, 0, 1);
    CHECK_THROWS_AS(decompose(axis), DecompositionError);
}

TEST_CASE("series bookkeeping")
{
    CharSeries s(5);
    s.set_coeff(1, 2, 4);
    CHECK(s.coeff(1, 2) == 4);
    s.set_coeff(1, 2, 0);
    CHECK(s.coeffs().empty());
    CHECK_THROWS_AS(s.set_coeff(4, 3, 1), std::invalid_argument);
    lcs::Engine eng;
    CHECK_THROWS_AS(char_B(eng, 0, 4), std::invalid_argument);
}
