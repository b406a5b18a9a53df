#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lcslab/linalg.hpp"
#include "lcslab/lcs.hpp"
#include "lcslab/ncalg.hpp"

#include <random>

using namespace lcslab;
using namespace lcslab::linalg;

namespace {

Vec vec(std::initializer_list<int> xs)
{
    Vec v;
    for (int x : xs) v.emplace_back(x);
    return v;
}

std::vector<Vec> random_vectors(std::mt19937& rng, int count, int dim)
{
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::vector<Vec> out;
    for (int i = 0; i < count; ++i) {
        Vec v(dim);
        for (int j = 0; j < dim; ++j) v[j] = Rat(coeff(rng));
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace

TEST_CASE("span basics")
{
    CHECK(span({}, 4).dim() == 0);
    Vec v = vec({1, 2, 0, -1});
    Vec twice = vec({2, 4, 0, -2});
    CHECK(span({v, twice}, 4).dim() == 1);
    CHECK_THROWS_AS(span({vec({1, 2})}, 3), std::invalid_argument);
}

TEST_CASE("span of independent power brackets in degree 5")
{
    // the four brackets [x^i, y^{5-i}] inside the 32-dimensional degree-5 space
    using namespace lcslab::ncalg;
    auto words = words_of_total_degree(2, 5);
    std::unordered_map<Word, std::size_t, WordHash> index;
    for (std::size_t i = 0; i < words.size(); ++i) index.emplace(words[i], i);
    std::vector<Vec> rows;
    for (int i = 1; i <= 4; ++i) {
        NcPoly b = bracket(NcPoly::monomial(2, Word(std::vector<std::uint8_t>(i, 0))),
                           NcPoly::monomial(2, Word(std::vector<std::uint8_t>(5 - i, 1))));
        Vec v(words.size());
        for (const auto& [w, c] : b.terms()) v[index.at(w)] = c;
        rows.push_back(std::move(v));
    }
    CHECK(span(rows, 32).dim() == 4);
}

TEST_CASE("rref invariants")
{
    std::mt19937 rng(11);
    for (int iter = 0; iter < 30; ++iter) {
        auto vs = random_vectors(rng, 6, 5);
        GradedSubspace s = span(vs, 5);
        // pivot entries are 1, pivots strictly increase, rows nonzero
        for (std::size_t i = 0; i < s.dim(); ++i) {
            REQUIRE(!s.rows()[i].entries.empty());
            CHECK(s.rows()[i].entries.front().first == s.pivot_cols()[i]);
            CHECK(s.rows()[i].entries.front().second == Rat(1));
            if (i > 0) CHECK(s.pivot_cols()[i - 1] < s.pivot_cols()[i]);
        }
        // pivot columns are zero in the other rows
        for (std::size_t i = 0; i < s.dim(); ++i)
            for (std::size_t j = 0; j < s.dim(); ++j) {
                if (i == j) continue;
                Vec row = s.row_dense(j);
                CHECK(row[s.pivot_cols()[i]].is_zero());
            }
        // idempotence: span of the rref rows is the same subspace
        std::vector<Vec> rows;
        for (std::size_t i = 0; i < s.dim(); ++i) rows.push_back(s.row_dense(i));
        CHECK(span(rows, 5) == s);
        // every generator is contained
        for (const Vec& v : vs) CHECK(s.contains(v));
    }
}

TEST_CASE("containment, quotient, sum")
{
    Vec e1 = vec({1, 0, 0});
    Vec e2 = vec({0, 1, 0});
    GradedSubspace s = span({e1, e2}, 3);
    GradedSubspace t = span({e1}, 3);
    CHECK(contains(s, vec({2, -7, 0})));
    CHECK(!contains(s, vec({0, 0, 1})));
    CHECK(quotient_dim(s, t) == 1);
    CHECK(quotient_dim(s, s) == 0);
    CHECK_THROWS_AS(quotient_dim(t, s), std::invalid_argument);
    CHECK(sum(t, span({e2}, 3)) == s);
    CHECK_THROWS_AS(sum(t, span({vec({1, 0})}, 2)), std::invalid_argument);
}

TEST_CASE("sum monotonicity and intersection dimension")
{
    std::mt19937 rng(12);
    for (int iter = 0; iter < 30; ++iter) {
        GradedSubspace s = span(random_vectors(rng, 3, 6), 6);
        GradedSubspace t = span(random_vectors(rng, 3, 6), 6);
        GradedSubspace u = sum(s, t);
        CHECK(u.dim() <= s.dim() + t.dim());
        int inter = intersection_dim(s, t);
        CHECK(inter >= 0);
        CHECK((u.dim() == s.dim() + t.dim()) == (inter == 0));
    }
}

TEST_CASE("determinism: identical inputs give identical rref")
{
    std::mt19937 rng(13);
    auto vs = random_vectors(rng, 8, 7);
    GradedSubspace a = span(vs, 7);
    GradedSubspace b = span(vs, 7);
    CHECK(a == b);
    for (std::size_t i = 0; i < a.dim(); ++i)
        CHECK(a.rows()[i].entries == b.rows()[i].entries);
}

TEST_CASE("exact solve")
{
    std::vector<Vec> cols{vec({1, 0, 1}), vec({0, 1, 1})};
    auto sol = solve_exact(cols, vec({2, 3, 5}));
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == Rat(2));
    CHECK((*sol)[1] == Rat(3));
    CHECK(!solve_exact(cols, vec({1, 1, 3})).has_value());
    std::vector<Vec> dep{vec({1, 0, 1}), vec({2, 0, 2})};
    CHECK_THROWS_AS(solve_exact(dep, vec({1, 0, 1})), std::invalid_argument);
}

TEST_CASE("determinant")
{
    CHECK(determinant({vec({1, 1}), vec({1, -1})}) == Rat(-2));
    CHECK(determinant({vec({1, 2}), vec({2, 4})}) == Rat(0));
    std::vector<Vec> m{vec({2, 0, 0}), vec({0, 3, 0}), vec({0, 0, 5})};
    CHECK(determinant(m) == Rat(30));
}
