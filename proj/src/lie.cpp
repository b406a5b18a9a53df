#include "lcslab/lie.hpp"

#include <numeric>
#include <stdexcept>

namespace lcslab::lie {

RootSystem RootSystem::type_a(int rank)
{
    if (rank < 1 || rank > 8) throw std::invalid_argument("type_a: rank out of range");
    RootSystem r;
    int n = rank + 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            std::vector<int> v(n, 0);
            v[i] = 1;
            v[j] = -1;
            r.roots.push_back(std::move(v));
        }
    r.weyl_order = 1;
    for (int k = 2; k <= n; ++k) r.weyl_order *= k;
    for (int k = 2; k <= n; ++k) r.degrees.push_back(k);
    return r;
}

void RootSystem::validate() const
{
    if (roots.empty()) throw std::invalid_argument("RootSystem: no roots");
    if (roots.size() % 2 != 0) throw std::invalid_argument("RootSystem: odd root count");
    std::size_t dim = roots[0].size();
    for (const auto& a : roots) {
        if (a.size() != dim) throw std::invalid_argument("RootSystem: ragged roots");
        std::vector<int> neg(dim);
        for (std::size_t k = 0; k < dim; ++k) neg[k] = -a[k];
        bool found = false;
        for (const auto& b : roots)
            if (b == neg) {
                found = true;
                break;
            }
        if (!found) throw std::invalid_argument("RootSystem: not closed under negation");
    }
    if (!degrees.empty()) {
        long long prod = 1;
        for (int d : degrees) prod *= d;
        if (prod != weyl_order)
            throw std::invalid_argument("RootSystem: product of degrees != Weyl order");
    }
}

ZPoly::ZPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

ZPoly ZPoly::constant(Int c) { return ZPoly(std::vector<Int>{std::move(c)}); }

ZPoly ZPoly::monomial(int deg, Int c)
{
    std::vector<Int> v(deg + 1, Int(0));
    v[deg] = std::move(c);
    return ZPoly(std::move(v));
}

void ZPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Int& ZPoly::coeff(int k) const
{
    static const Int zero(0);
    if (k < 0 || k >= (int)coeffs_.size()) return zero;
    return coeffs_[k];
}

Int ZPoly::eval(const Int& x) const
{
    Int r(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
    return r;
}

ZPoly operator+(const ZPoly& a, const ZPoly& b)
{
    std::vector<Int> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff((int)i) + b.coeff((int)i);
    return ZPoly(std::move(c));
}

ZPoly operator-(const ZPoly& a, const ZPoly& b)
{
    std::vector<Int> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff((int)i) - b.coeff((int)i);
    return ZPoly(std::move(c));
}

ZPoly operator*(const ZPoly& a, const ZPoly& b)
{
    if (a.is_zero() || b.is_zero()) return ZPoly();
    std::vector<Int> c(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return ZPoly(std::move(c));
}

ZPoly ZPoly::divide_exact(const ZPoly& divisor) const
{
    if (divisor.is_zero()) throw std::domain_error("ZPoly: division by zero");
    std::vector<Int> rem = coeffs_;
    int dd = divisor.degree();
    const Int& lead = divisor.coeffs_.back();
    std::vector<Int> q(std::max<int>(0, (int)rem.size() - dd), Int(0));
    for (int i = (int)rem.size() - 1; i >= dd; --i) {
        if (rem[i].is_zero()) continue;
        Int f = rem[i] / lead;
        if (f * lead != rem[i]) throw std::domain_error("ZPoly: inexact division");
        q[i - dd] = f;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * divisor.coeffs_[j];
    }
    for (const Int& r : rem)
        if (!r.is_zero()) throw std::domain_error("ZPoly: nonzero remainder");
    return ZPoly(std::move(q));
}

namespace {

struct WeightBox {
    std::vector<int> lo, hi;    // per-coordinate bounds on partial sums
    std::vector<long long> stride;
    long long cells = 1;

    explicit WeightBox(const std::vector<std::vector<int>>& roots)
    {
        if (roots.empty()) throw std::invalid_argument("WeightBox: empty root list");
        std::size_t dim = roots[0].size();
        lo.assign(dim, 0);
        hi.assign(dim, 0);
        for (const auto& r : roots)
            for (std::size_t k = 0; k < dim; ++k) {
                if (r[k] < 0) lo[k] += r[k];
                if (r[k] > 0) hi[k] += r[k];
            }
        stride.assign(dim, 1);
        for (std::size_t k = 0; k < dim; ++k) {
            long long width = (long long)hi[k] - lo[k] + 1;
            stride[k] = cells;
            cells *= width;
            if (cells > 50'000'000)
                throw std::overflow_error("zero_sum_poly: weight box overflow");
        }
    }

    long long index(const std::vector<int>& v) const
    {
        long long idx = 0;
        for (std::size_t k = 0; k < v.size(); ++k) idx += (v[k] - lo[k]) * stride[k];
        return idx;
    }
};

// 0/1 knapsack over the roots: cell -> coefficient list in z. Counts fit in
// long long for |R| <= 40 (at most C(40,20) subsets per cell).
std::vector<std::vector<long long>> subset_sum_table(const RootSystem& r)
{
    if (r.roots.size() > 40) throw std::overflow_error("zero_sum_poly: too many roots");
    WeightBox box(r.roots);
    std::vector<std::vector<long long>> table(box.cells), next(box.cells);
    std::vector<int> origin(r.dim(), 0);
    table[box.index(origin)] = {1};

    std::vector<int> pos(r.dim());
    for (const auto& root : r.roots) {
        next = table;
        for (long long idx = 0; idx < box.cells; ++idx) {
            const auto& src = table[idx];
            if (src.empty()) continue;
            // decode idx -> coordinates, then shift by root
            long long rest = idx;
            bool ok = true;
            for (int k = r.dim() - 1; k >= 0; --k) {
                pos[k] = (int)(rest / box.stride[k]) + box.lo[k];
                rest %= box.stride[k];
            }
            long long tgt = 0;
            for (int k = 0; k < r.dim(); ++k) {
                int c = pos[k] + root[k];
                if (c < box.lo[k] || c > box.hi[k]) {
                    ok = false;
                    break;
                }
                tgt += (c - box.lo[k]) * box.stride[k];
            }
            if (!ok) continue;
            auto& dst = next[tgt];
            if (dst.size() < src.size() + 1) dst.resize(src.size() + 1, 0);
            for (std::size_t j = 0; j < src.size(); ++j) dst[j + 1] += src[j];
        }
        table.swap(next);
    }
    return table;
}

} // namespace

ZPoly zero_sum_poly(const RootSystem& r)
{
    r.validate();
    auto table = subset_sum_table(r);
    WeightBox box(r.roots);
    std::vector<int> origin(r.dim(), 0);
    const auto& zs = table[box.index(origin)];
    std::vector<Int> coeffs;
    coeffs.reserve(zs.size());
    for (long long v : zs) coeffs.push_back(Int(v));
    return ZPoly(std::move(coeffs));
}

Int nu(const RootSystem& r) { return zero_sum_poly(r).eval(Int(1)); }

ZPoly h_poly(const RootSystem& r)
{
    if (r.degrees.empty()) throw std::invalid_argument("h_poly: degrees not provided");
    ZPoly result = ZPoly::constant(Int(1));
    for (int d : r.degrees) {
        // (z^{2d} - 1)/(z^2 - 1) = 1 + z^2 + ... + z^{2(d-1)}
        std::vector<Int> c(2 * d - 1, Int(0));
        for (int k = 0; k < d; ++k) c[2 * k] = Int(1);
        result = result * ZPoly(std::move(c));
    }
    return result;
}

ZPoly e_poly(const ZPoly& f, const ZPoly& h)
{
    ZPoly diff = f - h;
    if (!diff.eval(Int(-1)).is_zero())
        throw std::invalid_argument("e_poly: F(-1) != H(-1), (1+z) does not divide F - H");
    ZPoly one_plus_z(std::vector<Int>{Int(1), Int(1)});
    ZPoly q = diff.divide_exact(one_plus_z);
    return ZPoly::monomial(1) * q;
}

ZPoly f_v_poly(const RootSystem& r, const std::map<std::vector<int>, long long>& chi_v)
{
    r.validate();
    auto table = subset_sum_table(r);
    WeightBox box(r.roots);
    std::vector<Int> acc;
    for (const auto& [weight, mult] : chi_v) {
        if ((int)weight.size() != r.dim())
            throw std::invalid_argument("f_v_poly: weight dimension mismatch");
        if (mult == 0) continue;
        // constant term of chi_{V*} e^{sum}: the subsets with sum == weight
        // pair against mult_{V*}(-weight) = mult_V(weight)
        bool in_box = true;
        for (int k = 0; k < r.dim(); ++k)
            if (weight[k] < box.lo[k] || weight[k] > box.hi[k]) {
                in_box = false;
                break;
            }
        if (!in_box) continue;
        const auto& zs = table[box.index(weight)];
        if (acc.size() < zs.size()) acc.resize(zs.size(), Int(0));
        for (std::size_t j = 0; j < zs.size(); ++j) acc[j] += Int(zs[j]) * Int(mult);
    }
    return ZPoly(std::move(acc));
}

B2Invariant b2_invariant(const RootSystem& r)
{
    B2Invariant out;
    ZPoly f = zero_sum_poly(r);
    ZPoly h = h_poly(r);
    ZPoly e = e_poly(f, h);
    out.nu = f.eval(Int(1));
    out.weyl = r.weyl_order;
    Int diff = out.nu - Int(r.weyl_order);
    out.dim = diff / Int(4);
    if (out.dim * Int(4) != diff)
        throw std::logic_error("b2_invariant: nu - |W| is not divisible by 4");
    Int twice = e.eval(Int(1)) + e.eval(Int(-1));
    out.dim_via_series = twice / Int(2);
    if (out.dim_via_series * Int(2) != twice)
        throw std::logic_error("b2_invariant: E(1) + E(-1) is odd");
    return out;
}

Int euler_char(long long d, long long n)
{
    if (d < 1 || n < 1) throw std::invalid_argument("euler_char: need d, n >= 1");
    Int closed = Int(1) - Int::pow(Int(1 - d), (unsigned long long)n);
    // verify the recurrence chi(d,k) = d - (d-1) chi(d,k-1) against the
    // closed form along the way
    Int prev(d); // chi(d,1) = d
    for (long long k = 2; k <= n; ++k) prev = Int(d) - Int(d - 1) * prev;
    if (prev != closed) throw std::logic_error("euler_char: recurrence/closed form mismatch");
    return closed;
}

Int b2_hypersurface(long long d, long long n)
{
    if (d < 1 || n < 1) throw std::invalid_argument("b2_hypersurface: need d, n >= 1");
    if (n % 2 == 1) return Int(0);
    return Int::pow(Int(d - 1), (unsigned long long)n);
}

Int b2_plane_curve(long long d)
{
    if (d < 1) throw std::invalid_argument("b2_plane_curve: need d >= 1");
    return Int(d - 1) * Int(d - 1);
}

Int b2_superelliptic(long long m, const std::vector<long long>& p)
{
    if (m < 1 || p.empty()) throw std::invalid_argument("b2_superelliptic: need m >= 1, r >= 1");
    long long g = m;
    for (long long pi : p) {
        if (pi < 1) throw std::invalid_argument("b2_superelliptic: multiplicities must be >= 1");
        g = std::gcd(g, pi);
    }
    long long r = (long long)p.size();
    return Int(m) * Int(r - 1) + Int(g);
}

} // namespace lcslab::lie
