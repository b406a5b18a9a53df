#include "lcslab/derham.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcslab::derham {

using linalg::GradedSubspace;
using linalg::RrefBuilder;
using linalg::Vec;

MultiDegree FormTerm::multidegree() const
{
    MultiDegree d(expo.size());
    for (std::size_t k = 0; k < expo.size(); ++k)
        d[k] = expo[k] + (int)((mask >> k) & 1u);
    return d;
}

DiffForm::DiffForm(int nvars) : nvars_(nvars)
{
    if (nvars < 1 || nvars > 30) throw std::invalid_argument("DiffForm: bad variable count");
}

DiffForm DiffForm::one(int nvars)
{
    DiffForm f(nvars);
    f.terms_.emplace(FormTerm{std::vector<int>(nvars, 0), 0}, Rat(1));
    return f;
}

DiffForm DiffForm::variable(int nvars, int k)
{
    if (k < 0 || k >= nvars) throw std::invalid_argument("DiffForm: variable out of range");
    DiffForm f(nvars);
    FormTerm t{std::vector<int>(nvars, 0), 0};
    t.expo[k] = 1;
    f.terms_.emplace(std::move(t), Rat(1));
    return f;
}

DiffForm DiffForm::monomial(int nvars, FormTerm t, Rat c)
{
    if ((int)t.expo.size() != nvars) throw std::invalid_argument("DiffForm: bad term size");
    DiffForm f(nvars);
    if (!c.is_zero()) f.terms_.emplace(std::move(t), std::move(c));
    return f;
}

DiffForm DiffForm::from_multidegree_zero_form(const MultiDegree& expo)
{
    FormTerm t{expo, 0};
    return monomial((int)expo.size(), std::move(t));
}

std::vector<std::pair<FormTerm, Rat>> DiffForm::sorted_terms() const
{
    std::vector<std::pair<FormTerm, Rat>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        int da = a.first.total_degree(), db = b.first.total_degree();
        if (da != db) return da < db;
        if (a.first.mask != b.first.mask) return a.first.mask < b.first.mask;
        return a.first.expo < b.first.expo;
    });
    return v;
}

Rat DiffForm::coeff(const FormTerm& t) const
{
    auto it = terms_.find(t);
    return it == terms_.end() ? Rat() : it->second;
}

void DiffForm::add_term(const FormTerm& t, const Rat& c)
{
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool DiffForm::has_zero_form_part() const
{
    for (const auto& [t, c] : terms_)
        if (t.mask == 0) return true;
    return false;
}

DiffForm DiffForm::even_part() const
{
    DiffForm f(nvars_);
    for (const auto& [t, c] : terms_)
        if (t.form_degree() % 2 == 0) f.terms_.emplace(t, c);
    return f;
}

DiffForm DiffForm::odd_part() const
{
    DiffForm f(nvars_);
    for (const auto& [t, c] : terms_)
        if (t.form_degree() % 2 == 1) f.terms_.emplace(t, c);
    return f;
}

int DiffForm::max_total_degree() const
{
    int m = -1;
    for (const auto& [t, c] : terms_) m = std::max(m, t.total_degree());
    return m;
}

DiffForm DiffForm::operator-() const
{
    DiffForm f(nvars_);
    for (const auto& [t, c] : terms_) f.terms_.emplace(t, -c);
    return f;
}

DiffForm& DiffForm::operator+=(const DiffForm& b)
{
    if (nvars_ != b.nvars_) throw std::invalid_argument("DiffForm: nvars mismatch");
    for (const auto& [t, c] : b.terms_) add_term(t, c);
    return *this;
}

DiffForm& DiffForm::operator-=(const DiffForm& b)
{
    if (nvars_ != b.nvars_) throw std::invalid_argument("DiffForm: nvars mismatch");
    for (const auto& [t, c] : b.terms_) add_term(t, -c);
    return *this;
}

DiffForm operator+(const DiffForm& a, const DiffForm& b)
{
    DiffForm r = a;
    r += b;
    return r;
}

DiffForm operator-(const DiffForm& a, const DiffForm& b)
{
    DiffForm r = a;
    r -= b;
    return r;
}

DiffForm operator*(const Rat& c, const DiffForm& f)
{
    DiffForm r(f.nvars_);
    if (c.is_zero()) return r;
    for (const auto& [t, x] : f.terms_) r.terms_.emplace(t, c * x);
    return r;
}

bool operator==(const DiffForm& a, const DiffForm& b)
{
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    for (const auto& [t, c] : a.terms_) {
        auto it = b.terms_.find(t);
        if (it == b.terms_.end() || it->second != c) return false;
    }
    return true;
}

namespace {

// Koszul sign for xi_A ^ xi_B with ascending index convention; 0 on overlap.
int merge_sign(std::uint32_t a, std::uint32_t b)
{
    if (a & b) return 0;
    int inv = 0;
    std::uint32_t rest = a;
    while (rest) {
        int bit = __builtin_ctz(rest);
        rest &= rest - 1;
        inv += __builtin_popcount(b & ((1u << bit) - 1u));
    }
    return (inv & 1) ? -1 : 1;
}

int insert_sign(int k, std::uint32_t mask)
{
    return (__builtin_popcount(mask & ((1u << k) - 1u)) & 1) ? -1 : 1;
}

} // namespace

DiffForm wedge(const DiffForm& a, const DiffForm& b)
{
    if (a.nvars() != b.nvars()) throw std::invalid_argument("wedge: nvars mismatch");
    DiffForm r(a.nvars());
    for (const auto& [ta, ca] : a.terms()) {
        for (const auto& [tb, cb] : b.terms()) {
            int sgn = merge_sign(ta.mask, tb.mask);
            if (sgn == 0) continue;
            FormTerm t;
            t.expo.resize(ta.expo.size());
            for (std::size_t k = 0; k < t.expo.size(); ++k) t.expo[k] = ta.expo[k] + tb.expo[k];
            t.mask = ta.mask | tb.mask;
            Rat c = ca * cb;
            if (sgn < 0) c = -c;
            r.add_term(t, c);
        }
    }
    return r;
}

DiffForm d(const DiffForm& f)
{
    DiffForm r(f.nvars());
    for (const auto& [t, c] : f.terms()) {
        for (int k = 0; k < f.nvars(); ++k) {
            if (t.expo[k] == 0 || ((t.mask >> k) & 1u)) continue;
            FormTerm u = t;
            --u.expo[k];
            u.mask |= 1u << k;
            Rat coeff = Rat(t.expo[k]) * c;
            if (insert_sign(k, t.mask) < 0) coeff = -coeff;
            r.add_term(u, coeff);
        }
    }
    return r;
}

DiffForm fedosov(const DiffForm& a, const DiffForm& b)
{
    if (a.nvars() != b.nvars()) throw std::invalid_argument("fedosov: nvars mismatch");
    DiffForm db = d(b);
    DiffForm r = wedge(a, b);
    r += wedge(d(a.even_part()), db);
    r -= wedge(d(a.odd_part()), db);
    return r;
}

DiffForm inv_fedosov(const DiffForm& a, const DiffForm& b)
{
    if (a.nvars() != b.nvars()) throw std::invalid_argument("inv_fedosov: nvars mismatch");
    DiffForm db = d(b);
    DiffForm r = wedge(a, b);
    r -= wedge(d(a.even_part()), db);
    r += wedge(d(a.odd_part()), db);
    return r;
}

namespace {

std::vector<std::uint32_t> subsets_of_support(const MultiDegree& d, int p)
{
    int n = (int)d.size();
    std::vector<std::uint32_t> out;
    if (p < 0 || p > n) return out;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        if (__builtin_popcount(s) != p) continue;
        bool ok = true;
        for (int k = 0; k < n; ++k)
            if (((s >> k) & 1u) && d[k] < 1) {
                ok = false;
                break;
            }
        if (ok) out.push_back(s);
    }
    return out;
}

// rank of d : Omega^p[d] -> Omega^{p+1}[d] on polynomial forms (free case);
// the basis member for S is x^{d - 1_S} xi_S.
int free_form_d_rank(int n, int p, const MultiDegree& d)
{
    if (p < 0 || p >= n) return 0;
    auto src = subsets_of_support(d, p);
    auto dst = subsets_of_support(d, p + 1);
    if (src.empty() || dst.empty()) return 0;
    std::unordered_map<std::uint32_t, std::uint32_t> dst_index;
    for (std::size_t i = 0; i < dst.size(); ++i) dst_index.emplace(dst[i], (std::uint32_t)i);
    RrefBuilder builder(dst.size());
    for (std::uint32_t s : src) {
        Vec v(dst.size(), Rat());
        bool nonzero = false;
        for (int k = 0; k < n; ++k) {
            if ((s >> k) & 1u) continue;
            if (d[k] == 0) continue; // exponent of x_k in x^{d-1_S} is d_k
            auto it = dst_index.find(s | (1u << k));
            if (it == dst_index.end()) continue;
            Rat c(d[k]);
            if (insert_sign(k, s) < 0) c = -c;
            v[it->second] += c;
            nonzero = true;
        }
        if (nonzero) builder.add_row(v);
    }
    return (int)builder.dim();
}

} // namespace

int closed_dim(int n, int p, const MultiDegree& d)
{
    if ((int)d.size() != n) throw std::invalid_argument("closed_dim: degree size mismatch");
    if (p < 0 || p > n) throw std::invalid_argument("closed_dim: p out of range");
    int dim_p = (int)subsets_of_support(d, p).size();
    return dim_p - free_form_d_rank(n, p, d);
}

int exact_dim(int n, int p, const MultiDegree& d)
{
    if ((int)d.size() != n) throw std::invalid_argument("exact_dim: degree size mismatch");
    if (p < 0 || p > n) throw std::invalid_argument("exact_dim: p out of range");
    if (p == 0) return 0;
    return free_form_d_rank(n, p - 1, d);
}

EpsilonMatrix epsilon_matrix(int n)
{
    if (n < 3) throw std::invalid_argument("epsilon_matrix: need n >= 3");
    if (n > 12) throw std::invalid_argument("epsilon_matrix: n too large");
    EpsilonMatrix m;
    m.n = n;
    m.row_perms = ncalg::pn_row_order(n);

    // recursive column order over subsets of {1..n+1} containing 1 and n+1:
    // start from (1, n+1); the block for k appends {k+2, k+3} to the first
    // half of the previous columns and bumps k+2 to k+3 in the second half.
    std::vector<std::vector<int>> cols;
    cols.push_back({1, n + 1});
    for (int k = 0; k + 3 <= n; ++k) {
        std::vector<std::vector<int>> next;
        if (k == 0) {
            std::vector<int> s = cols[0];
            s.push_back(2);
            s.push_back(3);
            std::sort(s.begin(), s.end());
            next.push_back(std::move(s));
        } else {
            std::size_t half = (std::size_t)1 << (k - 1);
            for (std::size_t j = 0; j < half; ++j) {
                std::vector<int> s = cols[j];
                s.push_back(k + 2);
                s.push_back(k + 3);
                std::sort(s.begin(), s.end());
                next.push_back(std::move(s));
            }
            for (std::size_t j = half; j < 2 * half; ++j) {
                std::vector<int> s = cols[j];
                for (int& v : s)
                    if (v == k + 2) v = k + 3;
                std::sort(s.begin(), s.end());
                next.push_back(std::move(s));
            }
        }
        for (auto& s : next) cols.push_back(std::move(s));
    }
    m.col_subsets = cols;

    const std::size_t size = (std::size_t)1 << (n - 2);
    if (cols.size() != size || m.row_perms.size() != size)
        throw std::logic_error("epsilon_matrix: enumeration size mismatch");

    // entry = sign of sorting the variables of S as they appear along the
    // permuted monomial (positions ascending, p(n+1) = n+1 fixed).
    m.entries.assign(size, std::vector<int>(size, 0));
    for (std::size_t r = 0; r < size; ++r) {
        std::vector<int> seq = m.row_perms[r];
        seq.push_back(n + 1);
        for (std::size_t cidx = 0; cidx < size; ++cidx) {
            std::vector<bool> in_s(n + 2, false);
            for (int v : cols[cidx]) in_s[v] = true;
            std::vector<int> vals;
            for (int q = 0; q < n + 1; ++q)
                if (in_s[seq[q]]) vals.push_back(seq[q]);
            int inv = 0;
            for (std::size_t i = 0; i < vals.size(); ++i)
                for (std::size_t j = i + 1; j < vals.size(); ++j)
                    if (vals[i] > vals[j]) ++inv;
            m.entries[r][cidx] = (inv & 1) ? -1 : 1;
        }
    }

    std::vector<Vec> mat(size, Vec(size, Rat()));
    for (std::size_t r = 0; r < size; ++r)
        for (std::size_t c = 0; c < size; ++c) mat[r][c] = Rat(m.entries[r][c]);
    m.det = linalg::determinant(std::move(mat));
    return m;
}

bool monomial_component_alive(const std::vector<int>& powers, const MultiDegree& d)
{
    for (std::size_t i = 0; i < powers.size() && i < d.size(); ++i)
        if (d[i] >= powers[i]) return false;
    return true;
}

int monomial_ra_dim(int nvars, const std::vector<int>& powers, int p, const MultiDegree& d)
{
    if ((int)d.size() != nvars) throw std::invalid_argument("monomial_ra_dim: size mismatch");
    if (p < 0 || p > nvars) return 0;
    if (!powers.empty() && !monomial_component_alive(powers, d)) return 0;
    return (int)subsets_of_support(d, p).size();
}

int monomial_ra_d_rank(int nvars, const std::vector<int>& powers, int p, const MultiDegree& d)
{
    if ((int)d.size() != nvars) throw std::invalid_argument("monomial_ra_d_rank: size mismatch");
    if (!powers.empty() && !monomial_component_alive(powers, d)) return 0;
    return free_form_d_rank(nvars, p, d);
}

RAComplex::RAComplex(int nvars, std::vector<DiffForm> generators, int cutoff)
    : nvars_(nvars), cutoff_(cutoff)
{
    if (nvars < 1 || nvars > 12) throw std::invalid_argument("RAComplex: bad variable count");
    if (cutoff < 1) throw std::invalid_argument("RAComplex: cutoff must be positive");

    int gmax = 1;
    parity_only_ = false;
    for (const DiffForm& g : generators) {
        if (g.nvars() != nvars) throw std::invalid_argument("RAComplex: generator nvars mismatch");
        if (!g.odd_part().is_zero())
            throw std::invalid_argument("RAComplex: ideal generators must be even forms");
        gmax = std::max(gmax, g.max_total_degree());
        for (const auto& [t, c] : g.terms())
            if (t.form_degree() != 0) parity_only_ = true;
    }
    maxdeg_ = cutoff_ + 2 * gmax;

    // all monomial form terms of total degree <= maxdeg_
    std::vector<FormTerm> all;
    for (std::uint32_t mask = 0; mask < (1u << nvars); ++mask) {
        int fd = __builtin_popcount(mask);
        if (fd > maxdeg_) continue;
        int bound = maxdeg_ - fd;
        std::vector<int> expo(nvars, 0);
        int total = 0;
        while (true) {
            all.push_back(FormTerm{expo, mask});
            std::size_t pos = 0;
            while (pos < expo.size()) {
                ++expo[pos];
                ++total;
                if (total <= bound) break;
                total -= expo[pos];
                expo[pos] = 0;
                ++pos;
            }
            if (pos == expo.size()) break;
        }
    }

    int nblocks = parity_only_ ? 2 : nvars_ + 1;
    blocks_.resize(nblocks);
    for (FormTerm& t : all) {
        int b = parity_only_ ? (t.form_degree() & 1) : t.form_degree();
        blocks_[b].cols.push_back(t);
    }
    for (Block& b : blocks_) {
        std::sort(b.cols.begin(), b.cols.end(), [](const FormTerm& x, const FormTerm& y) {
            int dx = x.total_degree(), dy = y.total_degree();
            if (dx != dy) return dx > dy;
            if (x.mask != y.mask) return x.mask < y.mask;
            return x.expo < y.expo;
        });
        b.col_degree.resize(b.cols.size());
        for (std::size_t i = 0; i < b.cols.size(); ++i) {
            b.index.emplace(b.cols[i], (std::uint32_t)i);
            b.col_degree[i] = b.cols[i].total_degree();
        }
    }

    std::vector<DiffForm> gens;
    for (const DiffForm& g : generators) {
        if (g.is_zero()) continue;
        gens.push_back(g);
        DiffForm dg = d(g);
        if (!dg.is_zero()) gens.push_back(dg);
    }

    std::vector<RrefBuilder> builders;
    builders.reserve(blocks_.size());
    for (Block& b : blocks_) builders.emplace_back(b.cols.size());

    std::vector<FormTerm> mults = all;
    std::sort(mults.begin(), mults.end(), [](const FormTerm& x, const FormTerm& y) {
        int dx = x.total_degree(), dy = y.total_degree();
        if (dx != dy) return dx < dy;
        if (x.mask != y.mask) return x.mask < y.mask;
        return x.expo < y.expo;
    });

    // span {multiplier ^ G} over all monomial form multipliers; only products
    // whose full support stays inside the truncation are admitted
    for (const DiffForm& g : gens) {
        int gdeg = g.max_total_degree();
        for (const FormTerm& mt : mults) {
            if (mt.total_degree() + gdeg > maxdeg_) continue;
            DiffForm prod = wedge(DiffForm::monomial(nvars_, mt), g);
            if (prod.is_zero()) continue;
            if (parity_only_) {
                for (int par = 0; par < 2; ++par) {
                    Vec v(blocks_[par].cols.size(), Rat());
                    bool nz = false;
                    for (const auto& [t, c] : prod.terms()) {
                        if ((t.form_degree() & 1) != par) continue;
                        v[blocks_[par].index.at(t)] = c;
                        nz = true;
                    }
                    if (nz) builders[par].add_row(v);
                }
            } else {
                int p = prod.terms().begin()->first.form_degree();
                Vec v(blocks_[p].cols.size(), Rat());
                for (const auto& [t, c] : prod.terms()) v[blocks_[p].index.at(t)] = c;
                builders[p].add_row(v);
            }
        }
    }

    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        blocks_[b].ideal = std::move(builders[b]).build();
        for (std::uint32_t pc : blocks_[b].ideal.pivot_cols())
            blocks_[b].pivot_degree.push_back(blocks_[b].col_degree[pc]);
    }
}

void RAComplex::check_p(int p) const
{
    int lim = parity_only_ ? 2 : nvars_ + 1;
    if (p < 0 || p >= lim) throw std::invalid_argument("RAComplex: block out of range");
}

void RAComplex::check_level(int D) const
{
    if (D < 0 || D > cutoff_) throw std::invalid_argument("RAComplex: level exceeds cutoff");
}

int RAComplex::ambient_dim(int p, int D) const
{
    check_p(p);
    check_level(D);
    int c = 0;
    for (int deg : blocks_[p].col_degree)
        if (deg <= D) ++c;
    return c;
}

int RAComplex::ideal_dim(int p, int D) const
{
    check_p(p);
    check_level(D);
    int c = 0;
    for (int deg : blocks_[p].pivot_degree)
        if (deg <= D) ++c;
    return c;
}

int RAComplex::quotient_dim(int p, int D) const { return ambient_dim(p, D) - ideal_dim(p, D); }

int RAComplex::d_rank(int src_p, int D) const
{
    check_p(src_p);
    check_level(D);
    int dst_p = parity_only_ ? (src_p ^ 1) : src_p + 1;
    if (!parity_only_ && dst_p > nvars_) return 0;
    const Block& A = blocks_[src_p];
    const Block& B = blocks_[dst_p];

    std::vector<std::int32_t> qindex(B.cols.size(), -1);
    std::vector<bool> b_pivot(B.cols.size(), false);
    for (std::uint32_t pc : B.ideal.pivot_cols()) b_pivot[pc] = true;
    int nq = 0;
    for (std::size_t i = 0; i < B.cols.size(); ++i)
        if (!b_pivot[i] && B.col_degree[i] <= D) qindex[i] = nq++;
    if (nq == 0) return 0;

    std::vector<bool> a_pivot(A.cols.size(), false);
    for (std::uint32_t pc : A.ideal.pivot_cols()) a_pivot[pc] = true;

    RrefBuilder rank_builder((std::size_t)nq);
    for (std::size_t i = 0; i < A.cols.size(); ++i) {
        if (a_pivot[i] || A.col_degree[i] > D) continue;
        const FormTerm& t = A.cols[i];
        Vec v(B.cols.size(), Rat());
        bool nz = false;
        for (int k = 0; k < nvars_; ++k) {
            if (t.expo[k] == 0 || ((t.mask >> k) & 1u)) continue;
            FormTerm u = t;
            --u.expo[k];
            u.mask |= 1u << k;
            Rat c(t.expo[k]);
            if (insert_sign(k, t.mask) < 0) c = -c;
            v[B.index.at(u)] += c;
            nz = true;
        }
        if (!nz) continue;
        B.ideal.reduce(v);
        Vec q((std::size_t)nq, Rat());
        bool qnz = false;
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (v[j].is_zero()) continue;
            if (qindex[j] < 0)
                throw std::logic_error("RAComplex: reduction left the filtration level");
            q[qindex[j]] = std::move(v[j]);
            qnz = true;
        }
        if (qnz) rank_builder.add_row(q);
    }
    return (int)rank_builder.dim();
}

int RAComplex::exact_dim(int p, int D) const
{
    check_p(p);
    check_level(D);
    if (parity_only_) return d_rank(p ^ 1, D);
    if (p == 0) return 0;
    return d_rank(p - 1, D);
}

int RAComplex::closed_dim(int p, int D) const { return quotient_dim(p, D) - d_rank(p, D); }

int RAComplex::cohomology_dim(int p, int D) const
{
    if (D > cutoff_ - 1)
        throw std::invalid_argument(
            "RAComplex: cohomology at the truncation boundary is not reported");
    return closed_dim(p, D) - exact_dim(p, D);
}

int RAComplex::h_odd_total(int D) const
{
    if (parity_only_) return cohomology_dim(1, D);
    int s = 0;
    for (int p = 1; p <= nvars_; p += 2) s += cohomology_dim(p, D);
    return s;
}

int RAComplex::h_even_total(int D) const
{
    if (parity_only_) return cohomology_dim(0, D);
    int s = 0;
    for (int p = 0; p <= nvars_; p += 2) s += cohomology_dim(p, D);
    return s;
}

int RAComplex::exact_even_total(int D) const
{
    if (parity_only_) return exact_dim(0, D);
    int s = 0;
    for (int p = 2; p <= nvars_; p += 2) s += exact_dim(p, D);
    return s;
}

} // namespace lcslab::derham
