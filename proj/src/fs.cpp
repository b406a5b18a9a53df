#include "lcslab/fs.hpp"

#include <map>
#include <stdexcept>

namespace lcslab::fs {

using derham::FormTerm;
using linalg::RrefBuilder;
using linalg::Vec;

DiffForm phi_word(const Word& w, int n)
{
    DiffForm acc = DiffForm::one(n);
    for (auto letter : w.letters) {
        if (letter >= n) throw std::invalid_argument("phi: letter out of range");
        acc = derham::fedosov(acc, DiffForm::variable(n, letter));
    }
    return acc;
}

DiffForm phi(const NcPoly& p, int n)
{
    if (p.ngens() > n) throw std::invalid_argument("phi: polynomial has more generators than n");
    DiffForm r(n);
    for (const auto& [w, c] : p.terms()) r += c * phi_word(w, n);
    return r;
}

bool phi_closed_check(const NcPoly& p, int n, lcs::Engine& eng)
{
    if (!eng.in_lcs(AlgebraSpec::free_algebra(n), 2, p))
        throw std::invalid_argument("phi_closed_check: p is not in L_2");
    DiffForm image = phi(p, n);
    return derham::d(image).is_zero() && !image.has_zero_form_part();
}

B2Table pseudosmooth_b2_dims(int nvars, const std::vector<DiffForm>& relations, int cutoff)
{
    derham::RAComplex ra(nvars, relations, cutoff);
    B2Table table;
    table.cutoff = cutoff;
    table.identified = true;
    for (int lvl = 0; lvl <= cutoff - 1; ++lvl) {
        int odd = ra.h_odd_total(lvl);
        table.h_odd.push_back(odd);
        table.h_even.push_back(ra.h_even_total(lvl));
        if (odd != 0) table.identified = false;
    }
    for (int lvl = 0; lvl <= cutoff - 1; ++lvl)
        table.value.push_back(table.identified ? ra.exact_even_total(lvl) : table.h_odd[lvl]);
    return table;
}

bool tripcom_check(const AlgebraSpec& spec, const MultiDegree& d, lcs::Engine& eng)
{
    auto wb = eng.word_basis(spec, d);
    const auto& triple = eng.triple_ideal_component(spec, d);
    int lhs = (int)wb->size() - (int)triple.dim();
    int rhs = 0;
    for (int p = 0; p <= spec.ngens; p += 2)
        rhs += derham::monomial_ra_dim(spec.ngens, spec.powers, p, d);
    return lhs == rhs;
}

bool imd_check(const AlgebraSpec& spec, const MultiDegree& d, lcs::Engine& eng)
{
    const auto& triple = eng.triple_ideal_component(spec, d);
    const auto& l2 = eng.lcs_component(spec, 2, d);
    int lhs = (int)linalg::sum(l2, triple).dim() - (int)triple.dim();
    int rhs = 0;
    for (int p = 2; p <= spec.ngens; p += 2)
        rhs += derham::monomial_ra_d_rank(spec.ngens, spec.powers, p - 1, d);
    return lhs == rhs;
}

namespace {

struct PairKey {
    Word lo, hi; // lo < hi in deglex order

    friend bool operator<(const PairKey& a, const PairKey& b)
    {
        if (a.lo != b.lo) return ncalg::deglex_less(a.lo, b.lo);
        return ncalg::deglex_less(a.hi, b.hi);
    }
};

void all_sub_multidegrees(const MultiDegree& d, std::vector<MultiDegree>& out)
{
    MultiDegree e(d.size(), 0);
    while (true) {
        out.push_back(e);
        std::size_t pos = 0;
        while (pos < d.size() && e[pos] == d[pos]) {
            e[pos] = 0;
            ++pos;
        }
        if (pos == d.size()) break;
        ++e[pos];
    }
}

} // namespace

int hc1_dim(const AlgebraSpec& spec, const MultiDegree& d, lcs::Engine& eng)
{
    if ((int)d.size() != spec.ngens) throw std::invalid_argument("hc1_dim: degree size mismatch");
    if (ncalg::total_degree(d) < 1) throw std::invalid_argument("hc1_dim: need positive degree");

    auto allowed = [&](const Word& w) {
        return !spec.has_relations() || !ncalg::word_contains_forbidden_power(w, spec.powers);
    };

    // basis of wedge^2 A[d]: unordered pairs of distinct surviving monomials
    // with complementary multidegree (the empty word counts as a monomial)
    std::map<PairKey, std::uint32_t> pair_index;
    std::vector<MultiDegree> subs;
    all_sub_multidegrees(d, subs);
    auto add_pair = [&](const Word& u, const Word& v) {
        PairKey k = ncalg::deglex_less(u, v) ? PairKey{u, v} : PairKey{v, u};
        if (!pair_index.count(k)) pair_index.emplace(std::move(k), (std::uint32_t)pair_index.size());
    };
    for (const MultiDegree& e : subs) {
        MultiDegree f(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) f[i] = d[i] - e[i];
        if (f < e) continue; // unordered split
        auto us = eng.word_basis(spec, e);
        auto vs = eng.word_basis(spec, f);
        for (const Word& u : us->words)
            for (const Word& v : vs->words) {
                if (u == v) continue;
                add_pair(u, v);
            }
    }

    const std::size_t npairs = pair_index.size();
    auto pair_coord = [&](const Word& u, const Word& v, Vec& row, int sgn) {
        if (u == v) return;
        bool swapped = !ncalg::deglex_less(u, v);
        PairKey k = swapped ? PairKey{v, u} : PairKey{u, v};
        row[pair_index.at(k)] += Rat(swapped ? -sgn : sgn);
    };

    // W(A)[d]: rows ab^c + bc^a + ca^b over monomial triples
    RrefBuilder w_builder(npairs);
    for (const MultiDegree& e1 : subs) {
        MultiDegree r1(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) r1[i] = d[i] - e1[i];
        std::vector<MultiDegree> subs2;
        all_sub_multidegrees(r1, subs2);
        auto as = eng.word_basis(spec, e1);
        for (const MultiDegree& e2 : subs2) {
            MultiDegree e3(d.size());
            for (std::size_t i = 0; i < d.size(); ++i) e3[i] = r1[i] - e2[i];
            auto bs = eng.word_basis(spec, e2);
            auto cs = eng.word_basis(spec, e3);
            for (const Word& a : as->words)
                for (const Word& b : bs->words)
                    for (const Word& c : cs->words) {
                        Vec row(npairs, Rat());
                        Word ab = a.concat(b), bc = b.concat(c), ca = c.concat(a);
                        if (allowed(ab)) pair_coord(ab, c, row, 1);
                        if (allowed(bc)) pair_coord(bc, a, row, 1);
                        if (allowed(ca)) pair_coord(ca, b, row, 1);
                        bool nz = false;
                        for (const Rat& x : row)
                            if (!x.is_zero()) {
                                nz = true;
                                break;
                            }
                        if (nz) w_builder.add_row(row);
                    }
        }
    }

    int l2 = eng.l_dim(spec, 2, d);
    return (int)npairs - (int)w_builder.dim() - l2;
}

} // namespace lcslab::fs
