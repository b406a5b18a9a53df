#include "lcslab/lcs.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <sstream>

namespace lcslab::lcs {

using linalg::GradedSubspace;
using linalg::RrefBuilder;
using linalg::Vec;

std::string AlgebraSpec::cache_key() const
{
    std::ostringstream os;
    os << "n" << ngens;
    if (!powers.empty()) {
        os << ";m";
        for (std::size_t i = 0; i < powers.size(); ++i) os << (i ? "," : "") << powers[i];
    }
    return os.str();
}

linalg::Vec WordBasis::coords(const NcPoly& p) const
{
    Vec v(words.size(), Rat());
    for (const auto& [w, c] : p.terms()) {
        auto it = index.find(w);
        if (it == index.end())
            throw std::invalid_argument("WordBasis: polynomial not supported on this component");
        v[it->second] = c;
    }
    return v;
}

NcPoly WordBasis::poly_from_coords(int ngens, const linalg::Vec& v) const
{
    if (v.size() != words.size()) throw std::invalid_argument("WordBasis: size mismatch");
    NcPoly p(ngens);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) p.add_term(words[i], v[i]);
    return p;
}

int default_degree_ceiling()
{
    if (const char* env = std::getenv("LCSLAB_DEGREE_CEILING")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 16;
}

Engine::Engine(int degree_ceiling) : ceiling_(degree_ceiling) {}

void Engine::check_ceiling(const MultiDegree& d) const
{
    for (int c : d)
        if (c < 0) throw std::invalid_argument("negative multidegree entry");
    if (ncalg::total_degree(d) > ceiling_) {
        std::ostringstream os;
        os << "total degree " << ncalg::total_degree(d) << " exceeds ceiling " << ceiling_;
        throw DegreeCeilingError(os.str());
    }
}

namespace {

std::string degree_key(const MultiDegree& d)
{
    std::string s;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(d[i]);
    }
    return s;
}

} // namespace

std::shared_ptr<const WordBasis> Engine::word_basis(const AlgebraSpec& spec, const MultiDegree& d)
{
    if ((int)d.size() != spec.ngens) throw std::invalid_argument("word_basis: degree size mismatch");
    check_ceiling(d);
    std::string key = spec.cache_key() + "|" + degree_key(d);
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = basis_cache_.find(key);
        if (it != basis_cache_.end()) return it->second;
    }
    auto wb = std::make_shared<WordBasis>();
    for (auto& w : ncalg::words_of_multidegree(d)) {
        if (spec.has_relations() && ncalg::word_contains_forbidden_power(w, spec.powers)) continue;
        wb->index.emplace(w, (std::uint32_t)wb->words.size());
        wb->words.push_back(std::move(w));
    }
    std::lock_guard<std::mutex> lk(mu_);
    auto [it, inserted] = basis_cache_.emplace(key, std::move(wb));
    return it->second;
}

std::vector<std::pair<MultiDegree, MultiDegree>> proper_splits(const MultiDegree& d)
{
    std::vector<std::pair<MultiDegree, MultiDegree>> out;
    MultiDegree e(d.size(), 0);
    while (true) {
        // advance e through the componentwise box [0, d]
        std::size_t pos = 0;
        while (pos < d.size() && e[pos] == d[pos]) {
            e[pos] = 0;
            ++pos;
        }
        if (pos == d.size()) break;
        ++e[pos];
        int te = ncalg::total_degree(e);
        if (te == 0 || te == ncalg::total_degree(d)) continue;
        MultiDegree f(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) f[i] = d[i] - e[i];
        out.emplace_back(e, f);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::shared_ptr<const GradedSubspace> Engine::component_ptr(const AlgebraSpec& spec, int k,
                                                            const MultiDegree& d)
{
    if (k < 1) throw std::invalid_argument("lcs_component: k must be >= 1");
    check_ceiling(d);
    std::string key = spec.cache_key() + "|k" + std::to_string(k) + "|" + degree_key(d);
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = comp_cache_.find(key);
        if (it != comp_cache_.end()) return it->second;
    }

    auto wb = word_basis(spec, d);
    std::shared_ptr<const GradedSubspace> result;
    if (k == 1) {
        result = std::make_shared<GradedSubspace>(GradedSubspace::full(wb->size()));
    } else if (k > ncalg::total_degree(d)) {
        // a k-fold bracket needs at least k letters
        result = std::make_shared<GradedSubspace>(GradedSubspace(wb->size()));
    } else {
        RrefBuilder builder(wb->size());
        for (const auto& [e, f] : proper_splits(d)) {
            auto we = word_basis(spec, e);
            if (we->words.empty()) continue;
            const GradedSubspace& prev = lcs_component(spec, k - 1, f);
            if (prev.dim() == 0) continue;
            auto wf = word_basis(spec, f);
            for (const Word& m : we->words) {
                for (std::size_t r = 0; r < prev.dim(); ++r) {
                    Vec v(wb->size(), Rat());
                    bool nonzero = false;
                    for (const auto& [col, c] : prev.rows()[r].entries) {
                        const Word& w = wf->words[col];
                        Word mw = m.concat(w);
                        if (!spec.has_relations() ||
                            !ncalg::word_contains_forbidden_power(mw, spec.powers)) {
                            v[wb->index.at(mw)] += c;
                            nonzero = true;
                        }
                        Word wm = w.concat(m);
                        if (!spec.has_relations() ||
                            !ncalg::word_contains_forbidden_power(wm, spec.powers)) {
                            v[wb->index.at(wm)] -= c;
                            nonzero = true;
                        }
                    }
                    if (nonzero) builder.add_row(v);
                }
            }
        }
        result = std::make_shared<GradedSubspace>(std::move(builder).build());
    }

    std::lock_guard<std::mutex> lk(mu_);
    auto [it, inserted] = comp_cache_.emplace(key, std::move(result));
    return it->second;
}

const GradedSubspace& Engine::lcs_component(const AlgebraSpec& spec, int k, const MultiDegree& d)
{
    return *component_ptr(spec, k, d);
}

int Engine::l_dim(const AlgebraSpec& spec, int k, const MultiDegree& d)
{
    return (int)lcs_component(spec, k, d).dim();
}

int Engine::b_dim(const AlgebraSpec& spec, int k, const MultiDegree& d)
{
    return l_dim(spec, k, d) - l_dim(spec, k + 1, d);
}

namespace {

void enumerate_compositions(int ngens, int l, MultiDegree& acc, std::size_t pos,
                            std::vector<MultiDegree>& out)
{
    if (pos + 1 == (std::size_t)ngens) {
        acc[pos] = l;
        out.push_back(acc);
        return;
    }
    for (int v = 0; v <= l; ++v) {
        acc[pos] = v;
        enumerate_compositions(ngens, l - v, acc, pos + 1, out);
    }
}

} // namespace

long long Engine::b_dim_total(const AlgebraSpec& spec, int k, int l)
{
    std::vector<MultiDegree> degs;
    MultiDegree acc(spec.ngens, 0);
    enumerate_compositions(spec.ngens, l, acc, 0, degs);
    long long sum = 0;
    for (const auto& d : degs) sum += b_dim(spec, k, d);
    return sum;
}

bool Engine::in_lcs(const AlgebraSpec& spec, int k, const NcPoly& p)
{
    if (p.ngens() != spec.ngens) throw std::invalid_argument("in_lcs: generator count mismatch");
    NcPoly q = spec.has_relations() ? ncalg::monomial_quotient_reduce(p, spec.powers) : p;
    if (q.is_zero()) return true;
    // split into multidegree components; membership must hold componentwise
    std::map<MultiDegree, NcPoly> parts;
    for (const auto& [w, c] : q.terms()) {
        MultiDegree d = w.multidegree(spec.ngens);
        auto it = parts.find(d);
        if (it == parts.end()) it = parts.emplace(d, NcPoly(spec.ngens)).first;
        it->second.add_term(w, c);
    }
    for (const auto& [d, comp] : parts) {
        auto wb = word_basis(spec, d);
        if (!lcs_component(spec, k, d).contains(wb->coords(comp))) return false;
    }
    return true;
}

std::vector<NcPoly> canonical_b2_basis(int n, const MultiDegree& d)
{
    if ((int)d.size() != n) throw std::invalid_argument("canonical_b2_basis: degree size mismatch");
    if (n < 2) throw std::invalid_argument("canonical_b2_basis: need n >= 2");
    for (int c : d)
        if (c < 1)
            throw std::invalid_argument(
                "canonical_b2_basis: every degree entry must be positive (drop unused generators)");
    std::vector<NcPoly> out;
    for (const auto& p : ncalg::pn_row_order(n)) {
        Word head;
        for (int q = 0; q + 1 < n; ++q) {
            int var = p[q] - 1;
            for (int t = 0; t < d[var]; ++t) head.letters.push_back((std::uint8_t)var);
        }
        int last = p[n - 1] - 1;
        Word tail(std::vector<std::uint8_t>((std::size_t)d[last], (std::uint8_t)last));
        out.push_back(ncalg::bracket(NcPoly::monomial(n, head), NcPoly::monomial(n, tail)));
    }
    return out;
}

std::vector<Rat> Engine::express_in_b2_basis(const NcPoly& p, int n, const MultiDegree& d)
{
    AlgebraSpec spec = AlgebraSpec::free_algebra(n);
    auto pd = p.multidegree();
    if (!pd || *pd != d)
        throw std::invalid_argument("express_in_b2_basis: polynomial is not homogeneous of degree d");
    auto wb = word_basis(spec, d);
    Vec target = wb->coords(p);
    const GradedSubspace& l2 = lcs_component(spec, 2, d);
    if (!l2.contains(target)) throw std::invalid_argument("express_in_b2_basis: p is not in L_2");
    const GradedSubspace& l3 = lcs_component(spec, 3, d);
    std::vector<Vec> cols;
    for (const NcPoly& b : canonical_b2_basis(n, d)) {
        Vec v = wb->coords(b);
        l3.reduce(v);
        cols.push_back(std::move(v));
    }
    l3.reduce(target);
    auto sol = linalg::solve_exact(cols, target);
    if (!sol) throw std::invalid_argument("express_in_b2_basis: inconsistent system");
    return *sol;
}

namespace {

void sub_multidegrees(const MultiDegree& d, bool allow_zero, std::vector<MultiDegree>& out)
{
    MultiDegree e(d.size(), 0);
    while (true) {
        if (allow_zero || ncalg::total_degree(e) > 0) out.push_back(e);
        std::size_t pos = 0;
        while (pos < d.size() && e[pos] == d[pos]) {
            e[pos] = 0;
            ++pos;
        }
        if (pos == d.size()) break;
        ++e[pos];
    }
}

MultiDegree minus(const MultiDegree& a, const MultiDegree& b)
{
    MultiDegree r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

} // namespace

const GradedSubspace& Engine::triple_ideal_component(const AlgebraSpec& spec, const MultiDegree& d)
{
    check_ceiling(d);
    std::string key = spec.cache_key() + "|" + degree_key(d);
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = triple_cache_.find(key);
        if (it != triple_cache_.end()) return *it->second;
    }
    auto wb = word_basis(spec, d);
    RrefBuilder builder(wb->size());

    std::vector<MultiDegree> subs;
    sub_multidegrees(d, true, subs);

    for (const MultiDegree& e1 : subs) {
        MultiDegree r1 = minus(d, e1);
        auto m1s = word_basis(spec, e1);
        if (m1s->words.empty()) continue;
        std::vector<MultiDegree> s2;
        sub_multidegrees(r1, false, s2);
        for (const MultiDegree& e2 : s2) {
            MultiDegree r2 = minus(r1, e2);
            auto as = word_basis(spec, e2);
            if (as->words.empty()) continue;
            std::vector<MultiDegree> s3;
            sub_multidegrees(r2, false, s3);
            for (const MultiDegree& e3 : s3) {
                MultiDegree r3 = minus(r2, e3);
                auto bs = word_basis(spec, e3);
                if (bs->words.empty()) continue;
                std::vector<MultiDegree> s4;
                sub_multidegrees(r3, false, s4);
                for (const MultiDegree& e4 : s4) {
                    MultiDegree e5 = minus(r3, e4);
                    auto cs = word_basis(spec, e4);
                    if (cs->words.empty()) continue;
                    auto m2s = word_basis(spec, e5);
                    if (m2s->words.empty()) continue;
                    for (const Word& wa : as->words)
                        for (const Word& wb2 : bs->words)
                            for (const Word& wc : cs->words) {
                                // [[a,b],c] = abc - bac - cab + cba
                                std::array<std::pair<Word, int>, 4> terms = {
                                    std::make_pair(wa.concat(wb2).concat(wc), 1),
                                    std::make_pair(wb2.concat(wa).concat(wc), -1),
                                    std::make_pair(wc.concat(wa).concat(wb2), -1),
                                    std::make_pair(wc.concat(wb2).concat(wa), 1)};
                                for (const Word& m1 : m1s->words)
                                    for (const Word& m2 : m2s->words) {
                                        Vec v(wb->size(), Rat());
                                        bool nonzero = false;
                                        for (const auto& [w, sgn] : terms) {
                                            Word full = m1.concat(w).concat(m2);
                                            if (spec.has_relations() &&
                                                ncalg::word_contains_forbidden_power(full,
                                                                                     spec.powers))
                                                continue;
                                            v[wb->index.at(full)] += Rat(sgn);
                                            nonzero = true;
                                        }
                                        if (nonzero) builder.add_row(v);
                                    }
                            }
                }
            }
        }
    }

    auto result = std::make_shared<GradedSubspace>(std::move(builder).build());
    std::lock_guard<std::mutex> lk(mu_);
    auto [it, inserted] = triple_cache_.emplace(key, std::move(result));
    return *it->second;
}

bool Engine::nonsplit_witness_check()
{
    using ncalg::bracket;
    AlgebraSpec spec = AlgebraSpec::free_algebra(2);
    NcPoly x = NcPoly::generator(2, 0);
    NcPoly y = NcPoly::generator(2, 1);
    NcPoly x2 = mul(x, x);
    NcPoly y2 = mul(y, y);

    NcPoly a = bracket(x, bracket(x, bracket(x, y2)));
    NcPoly c = bracket(bracket(x, y), bracket(x2, y));
    NcPoly e = bracket(y, bracket(x2, bracket(x, y)));
    NcPoly f = bracket(x, bracket(y, bracket(x2, y)));

    NcPoly s1 = Rat(-3) * a;
    NcPoly s2 = c - Rat(2) * e;
    NcPoly s3 = c + Rat(2) * f + Rat(3) * a;

    if (s1 + s2 + s3 != Rat(4) * c) return false;
    for (const NcPoly* s : {&s1, &s2, &s3})
        if (!in_lcs(spec, 4, *s)) return false;
    return !in_lcs(spec, 5, c);
}

} // namespace lcslab::lcs
