#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lcslab/fs.hpp"
#include "lcslab/io.hpp"

#include <random>

using namespace lcslab;
using namespace lcslab::fs;
using namespace lcslab::ncalg;
using derham::DiffForm;
using derham::FormTerm;

namespace {

const AlgebraSpec a2 = AlgebraSpec::free_algebra(2);
const AlgebraSpec a3 = AlgebraSpec::free_algebra(3);

Word w(std::initializer_list<int> letters)
{
    Word r;
    for (int l : letters) r.letters.push_back((std::uint8_t)l);
    return r;
}

Word random_word(std::mt19937& rng, int n, int len)
{
    std::uniform_int_distribution<int> letter(0, n - 1);
    Word r;
    for (int i = 0; i < len; ++i) r.letters.push_back((std::uint8_t)letter(rng));
    return r;
}

} // namespace

TEST_CASE("phi on generators and short words")
{
    int n = 3;
    CHECK(phi(NcPoly::generator(n, 0), n) == DiffForm::variable(n, 0));
    // phi(x_i x_j) = x_i x_j + dx_i ^ dx_j
    DiffForm got = phi(NcPoly::monomial(n, w({0, 1})), n);
    DiffForm xy = derham::wedge(DiffForm::variable(n, 0), DiffForm::variable(n, 1));
    FormTerm dxdy{std::vector<int>(n, 0), 0b011};
    CHECK(got == xy + DiffForm::monomial(n, dxdy));
    // phi(1) = 1
    CHECK(phi(NcPoly::one(n), n) == DiffForm::one(n));
}

TEST_CASE("phi is multiplicative for the fedosov product")
{
    std::mt19937 rng(31);
    for (int n = 2; n <= 3; ++n)
        for (int iter = 0; iter < 40; ++iter) {
            std::uniform_int_distribution<int> len(0, 4);
            Word a = random_word(rng, n, len(rng));
            Word b = random_word(rng, n, len(rng));
            DiffForm lhs = phi(NcPoly::monomial(n, a.concat(b)), n);
            DiffForm rhs = derham::fedosov(phi_word(a, n), phi_word(b, n));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("phi sends brackets to closed even forms")
{
    lcs::Engine eng;
    CHECK(phi_closed_check(bracket(NcPoly::generator(2, 0), NcPoly::generator(2, 1)), 2, eng));
    // the image of [x, y] is 2 dx ^ dy
    DiffForm img = phi(bracket(NcPoly::generator(2, 0), NcPoly::generator(2, 1)), 2);
    FormTerm dxdy{std::vector<int>(2, 0), 0b11};
    CHECK(img == DiffForm::monomial(2, dxdy, Rat(2)));

    // random Lie words in three generators
    std::mt19937 rng(32);
    for (int iter = 0; iter < 15; ++iter) {
        Word a = random_word(rng, 3, 2);
        Word b = random_word(rng, 3, 2);
        NcPoly p = bracket(NcPoly::monomial(3, a), NcPoly::monomial(3, b));
        if (p.is_zero()) continue;
        CHECK(phi_closed_check(p, 3, eng));
    }
    CHECK_THROWS_AS(phi_closed_check(NcPoly::generator(2, 0), 2, eng), std::invalid_argument);
}

TEST_CASE("image of the series under phi matches closed-form counts")
{
    // the composite L_2[d] -> closed even forms [d] is onto with kernel L_3[d]
    lcs::Engine eng;
    for (int n = 2; n <= 3; ++n) {
        AlgebraSpec spec = AlgebraSpec::free_algebra(n);
        std::vector<MultiDegree> degs;
        if (n == 2)
            degs = {{1, 1}, {2, 1}, {2, 2}, {3, 2}, {4, 2}, {3, 3}};
        else
            degs = {{1, 1, 1}, {2, 1, 1}, {2, 2, 1}, {2, 2, 2}};
        for (const auto& d : degs) {
            int closed_even = 0;
            for (int p = 2; p <= n; p += 2) closed_even += derham::closed_dim(n, p, d);
            int quotient = eng.b_dim(spec, 2, d);
            CHECK(quotient == closed_even);
            // spot-check injectivity modulo L_3 through coordinates of phi
            const auto& l3 = eng.lcs_component(spec, 3, d);
            auto wb = eng.word_basis(spec, d);
            for (std::size_t i = 0; i < std::min<std::size_t>(l3.dim(), 3); ++i) {
                NcPoly b = wb->poly_from_coords(n, l3.row_dense(i));
                CHECK(derham::d(phi(b, n)).is_zero());
            }
        }
    }
}

TEST_CASE("express-in-basis is consistent with phi")
{
    lcs::Engine eng;
    MultiDegree d{2, 3};
    NcPoly p = bracket(NcPoly::monomial(2, w({0, 1, 0})), NcPoly::monomial(2, w({1, 1})));
    auto coeffs = eng.express_in_b2_basis(p, 2, d);
    REQUIRE(coeffs.size() == 1);
    auto basis = lcs::canonical_b2_basis(2, d);
    DiffForm difference = phi(p, 2) - coeffs[0] * phi(basis[0], 2);
    // the difference is the image of an element of L_3, hence a closed form
    // whose bracket part reduces to zero: check it is d-closed and that p
    // minus the combination is in L_3
    CHECK(derham::d(difference).is_zero());
    NcPoly rest = p - coeffs[0] * basis[0];
    CHECK(eng.in_lcs(a2, 3, rest));
}

TEST_CASE("triple-commutator quotient matches even forms")
{
    lcs::Engine eng;
    // free, by hand at (1,1): A[d] is 2-dimensional, T[d] = 0, even forms
    // {x1 x2, dx1 ^ dx2}
    CHECK(tripcom_check(a2, {1, 1}, eng));
    for (int l = 1; l <= 5; ++l)
        for (int r = 0; r <= l; ++r) CHECK(tripcom_check(a2, {r, l - r}, eng));
    CHECK(tripcom_check(a3, {1, 1, 1}, eng));
    CHECK(tripcom_check(a3, {2, 1, 1}, eng));
    // monomial-relation quotient
    AlgebraSpec rel = AlgebraSpec::with_powers({2, 2});
    for (int r = 0; r <= 3; ++r)
        for (int s = 0; r + s <= 4; ++s) {
            if (r + s == 0) continue;
            CHECK(tripcom_check(rel, {r, s}, eng));
        }
}

TEST_CASE("bracket image matches exact forms")
{
    lcs::Engine eng;
    for (int l = 1; l <= 5; ++l)
        for (int r = 0; r <= l; ++r) CHECK(imd_check(a2, {r, l - r}, eng));
    CHECK(imd_check(a3, {1, 1, 1}, eng));
    CHECK(imd_check(a3, {2, 2, 1}, eng));
    AlgebraSpec rel = AlgebraSpec::with_powers({2, 2});
    CHECK(imd_check(rel, {1, 1}, eng));
    CHECK(imd_check(rel, {2, 1}, eng));
    CHECK(imd_check(rel, {2, 2}, eng));
}

TEST_CASE("first cyclic homology vanishes for the free algebra")
{
    lcs::Engine eng;
    for (int l = 1; l <= 4; ++l)
        for (int r = 0; r <= l; ++r) CHECK(hc1_dim(a2, {r, l - r}, eng) == 0);
    CHECK(hc1_dim(a3, {1, 1, 0}, eng) == 0);
    CHECK(hc1_dim(a3, {1, 1, 1}, eng) == 0);
    CHECK_THROWS_AS(hc1_dim(a2, {0, 0}, eng), std::invalid_argument);
}

TEST_CASE("noncommutative relations reduce through phi")
{
    // xyx - 1 maps to x^2 y - 1: a 0-form relation
    NcPoly p = NcPoly::monomial(2, w({0, 1, 0})) - NcPoly::one(2);
    DiffForm image = phi(p, 2);
    DiffForm want = io::parse_commutative_poly("x1^2*x2-1", 2);
    CHECK(image == want);
    // so the pipeline prices its B_2 like the curve x^2 y = 1
    auto table = pseudosmooth_b2_dims(2, {image}, 7);
    CHECK(!table.identified);
    CHECK(table.h_odd.back() == 1); // upper bound 1, the true value may be smaller
}

TEST_CASE("sphere pipeline identifies B_2")
{
    DiffForm g = io::parse_commutative_poly("x1^2+x2^2+x3^2-1", 3);
    auto table = pseudosmooth_b2_dims(3, {g}, 6);
    CHECK(table.identified);
    REQUIRE(table.value.size() == 6);
    for (int lvl = 0; lvl <= 5; ++lvl) {
        CHECK(table.h_odd[lvl] == 0);
        CHECK(table.value[lvl] == (lvl >= 2 ? lvl * lvl - 1 : 0));
    }
}

TEST_CASE("curve pipelines report upper bounds")
{
    DiffForm g1 = io::parse_commutative_poly("x1*x2-1", 2);
    auto t1 = pseudosmooth_b2_dims(2, {g1}, 7);
    CHECK(!t1.identified);
    CHECK(t1.h_odd.back() == 1);
    CHECK(t1.value.back() == 1);

    DiffForm g2 = io::parse_commutative_poly("x1^2*x2-1", 2);
    auto t2 = pseudosmooth_b2_dims(2, {g2}, 7);
    CHECK(!t2.identified);
    CHECK(t2.h_odd.back() == 1);
}
