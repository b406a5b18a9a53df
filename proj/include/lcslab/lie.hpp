#pragma once

#include "lcslab/rational.hpp"

#include <map>
#include <vector>

namespace lcslab::lie {

// A finite root system given by explicit integer vectors (both signs), plus
// the Weyl group order and the degrees of the invariant generators.
struct RootSystem {
    std::vector<std::vector<int>> roots;
    long long weyl_order = 1;
    std::vector<int> degrees; // exponents + 1

    static RootSystem type_a(int rank); // A_1..: roots e_i - e_j in Z^{rank+1}
    void validate() const; // negation-closed, product of degrees == |W|
    int dim() const { return roots.empty() ? 0 : (int)roots[0].size(); }
};

// Integer polynomial in one variable z (coefficient list, trailing zeros trimmed).
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(std::vector<Int> coeffs);
    static ZPoly constant(Int c);
    static ZPoly monomial(int deg, Int c = Int(1));

    int degree() const { return (int)coeffs_.size() - 1; } // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }
    const Int& coeff(int k) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }

    Int eval(const Int& x) const;

    friend ZPoly operator+(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator-(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const ZPoly& a, const ZPoly& b) { return !(a == b); }

    // exact division; throws if the remainder is nonzero
    ZPoly divide_exact(const ZPoly& divisor) const;

private:
    std::vector<Int> coeffs_;
    void trim();
};

// F_C(z) = sum over subsets S of R with zero vector sum of z^{|S|}, computed
// by dynamic programming over partial sums in the bounding box of the root
// lattice. nu(R) = F_C(1).
ZPoly zero_sum_poly(const RootSystem& r);
Int nu(const RootSystem& r);

// Poincare polynomial of G/H: product over degrees of (z^{2d_i}-1)/(z^2-1).
ZPoly h_poly(const RootSystem& r);

// E = z (F - H) / (1 + z); requires F(-1) == H(-1).
ZPoly e_poly(const ZPoly& f, const ZPoly& h);

// F_V(z): constant term of chi_{V*} * prod over roots of (1 + z e^alpha),
// for a caller-supplied weight multiplicity table of V.
ZPoly f_v_poly(const RootSystem& r, const std::map<std::vector<int>, long long>& chi_v);

struct B2Invariant {
    Int nu;
    long long weyl = 0;
    Int dim;            // (nu - |W|)/4
    Int dim_via_series; // (E(1) + E(-1))/2, cross-check
};
B2Invariant b2_invariant(const RootSystem& r);

// Euler characteristic 1 - (1-d)^n of the standard degree-d hypersurface in
// C^n; also verifies chi(d,n) = d - (d-1) chi(d,n-1) along the way.
Int euler_char(long long d, long long n);
// dim of the odd-cohomology quotient for a generic degree-d relation in n
// variables: (d-1)^n for even n, 0 for odd n.
Int b2_hypersurface(long long d, long long n);
// smooth plane curve of degree d: (d-1)^2
Int b2_plane_curve(long long d);
// y^m = Q(x) with root multiplicities p_1..p_r: m(r-1) + gcd(p_1,..,p_r,m)
Int b2_superelliptic(long long m, const std::vector<long long>& p);

} // namespace lcslab::lie
