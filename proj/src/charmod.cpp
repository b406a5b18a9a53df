#include "lcslab/charmod.hpp"

#include <sstream>

namespace lcslab::charmod {

CharSeries::CharSeries(int truncation) : trunc_(truncation)
{
    if (truncation < 0) throw std::invalid_argument("CharSeries: negative truncation");
}

long long CharSeries::coeff(int a, int b) const
{
    auto it = coeffs_.find({a, b});
    return it == coeffs_.end() ? 0 : it->second;
}

void CharSeries::set_coeff(int a, int b, long long v)
{
    if (a < 0 || b < 0 || a + b > trunc_)
        throw std::invalid_argument("CharSeries: coefficient outside truncation");
    if (v == 0)
        coeffs_.erase({a, b});
    else
        coeffs_[{a, b}] = v;
}

bool CharSeries::symmetric() const
{
    for (const auto& [ab, v] : coeffs_)
        if (coeff(ab.second, ab.first) != v) return false;
    return true;
}

CharSeries operator+(const CharSeries& x, const CharSeries& y)
{
    if (x.trunc_ != y.trunc_) throw std::invalid_argument("CharSeries: truncation mismatch");
    CharSeries r = x;
    for (const auto& [ab, v] : y.coeffs_) r.set_coeff(ab.first, ab.second, r.coeff(ab.first, ab.second) + v);
    return r;
}

CharSeries operator-(const CharSeries& x, const CharSeries& y)
{
    if (x.trunc_ != y.trunc_) throw std::invalid_argument("CharSeries: truncation mismatch");
    CharSeries r = x;
    for (const auto& [ab, v] : y.coeffs_) r.set_coeff(ab.first, ab.second, r.coeff(ab.first, ab.second) - v);
    return r;
}

bool operator==(const CharSeries& x, const CharSeries& y)
{
    return x.trunc_ == y.trunc_ && x.coeffs_ == y.coeffs_;
}

CharSeries char_F(int p, int k, int truncation)
{
    if (k < 1 || p < k) throw std::invalid_argument("char_F: need p >= k >= 1");
    CharSeries r(truncation);
    for (int i = 0; i <= p - k; ++i) {
        // base monomial s^{k+i} t^{p-i}, multiplied by 1/((1-s)(1-t))
        int a0 = k + i, b0 = p - i;
        for (int a = a0; a <= truncation; ++a)
            for (int b = b0; a + b <= truncation; ++b)
                r.set_coeff(a, b, r.coeff(a, b) + 1);
    }
    return r;
}

CharSeries char_B(lcs::Engine& eng, int k, int truncation)
{
    if (k < 1) throw std::invalid_argument("char_B: need k >= 1");
    lcs::AlgebraSpec spec = lcs::AlgebraSpec::free_algebra(2);
    CharSeries r(truncation);
    for (int a = 0; a <= truncation; ++a)
        for (int b = 0; a + b <= truncation; ++b)
            r.set_coeff(a, b, eng.b_dim(spec, k, {a, b}));
    return r;
}

long long Decomposition::multiplicity(int p, int k) const
{
    for (const auto& [pk, m] : multiplicities)
        if (pk.first == p && pk.second == k) return m;
    return 0;
}

Decomposition decompose(const CharSeries& series)
{
    const int trunc = series.truncation();
    const int certified = trunc - 2; // safety margin for truncated arithmetic
    Decomposition out;
    out.certified_total = certified;

    // P = (1-s)(1-t) * series, reliable for a + b <= trunc
    auto c = [&](int a, int b) -> long long {
        if (a < 0 || b < 0) return 0;
        return series.coeff(a, b);
    };
    std::map<std::pair<int, int>, long long> P;
    for (int a = 0; a <= trunc; ++a)
        for (int b = 0; a + b <= trunc; ++b) {
            long long v = c(a, b) - c(a - 1, b) - c(a, b - 1) + c(a - 1, b - 1);
            if (v != 0) P[{a, b}] = v;
        }
    auto get = [&](int a, int b) -> long long {
        auto it = P.find({a, b});
        return it == P.end() ? 0 : it->second;
    };
    auto sub = [&](int a, int b, long long v) {
        long long nv = get(a, b) - v;
        if (nv == 0)
            P.erase({a, b});
        else
            P[{a, b}] = nv;
    };

    // antidiagonals outside-in: within total degree m, the widest surviving
    // diagram is read off at the largest s-power
    for (int m = 2; m <= certified; ++m) {
        for (int a = m - 1; a * 2 >= m; --a) {
            int b = m - a;
            long long mult = get(a, b);
            if (mult == 0) continue;
            if (mult < 0) {
                std::ostringstream os;
                os << "decompose: negative multiplicity " << mult << " at diagram (" << a << ","
                   << b << ")";
                throw DecompositionError(os.str());
            }
            out.multiplicities.push_back({{a, b}, mult});
            // strip the full segment s^k t^p .. s^p t^k of this diagram
            for (int i = 0; i <= a - b; ++i) sub(b + i, a - i, mult);
        }
    }

    for (const auto& [ab, v] : P) {
        if (v == 0) continue;
        if (ab.first + ab.second <= certified) {
            std::ostringstream os;
            os << "decompose: nonzero remainder " << v << " at s^" << ab.first << " t^"
               << ab.second
               << " (no two-row diagram covers it; one-row modules and exact one-forms are "
                  "outside the dictionary, or the truncation is too small)";
            throw DecompositionError(os.str());
        }
    }
    return out;
}

} // namespace lcslab::charmod
