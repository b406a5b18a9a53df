#pragma once

#include "lcslab/lcs.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lcslab::charmod {

// Truncated bivariate character series sum dim M[a,b] s^a t^b, kept for
// a + b <= truncation.
class CharSeries {
public:
    explicit CharSeries(int truncation);

    int truncation() const { return trunc_; }
    long long coeff(int a, int b) const;
    void set_coeff(int a, int b, long long v);
    const std::map<std::pair<int, int>, long long>& coeffs() const { return coeffs_; }

    bool symmetric() const; // invariant under s <-> t

    friend CharSeries operator+(const CharSeries& x, const CharSeries& y);
    friend CharSeries operator-(const CharSeries& x, const CharSeries& y);
    friend bool operator==(const CharSeries& x, const CharSeries& y);
    friend bool operator!=(const CharSeries& x, const CharSeries& y) { return !(x == y); }

private:
    int trunc_;
    std::map<std::pair<int, int>, long long> coeffs_; // nonzero entries only
};

// Character of the irreducible module attached to the two-row diagram (p,k):
// s^k t^k (t^{p-k} + t^{p-k-1} s + ... + s^{p-k}) / ((1-s)(1-t)), truncated.
CharSeries char_F(int p, int k, int truncation);

// Character of B_k for the free algebra on two generators, assembled from
// computed dimensions.
CharSeries char_B(lcs::Engine& eng, int k, int truncation);

struct DecompositionError : std::runtime_error {
    explicit DecompositionError(const std::string& m) : std::runtime_error(m) {}
};

struct Decomposition {
    // ((p,k), multiplicity), certified for p + k <= certified_total
    std::vector<std::pair<std::pair<int, int>, long long>> multiplicities;
    int certified_total = 0;

    long long multiplicity(int p, int k) const;
};

// Greedy elimination against the two-row dictionary: multiplies by
// (1-s)(1-t) and strips antidiagonal segments outside-in. Throws
// DecompositionError on negative multiplicities, on coefficients that no
// two-row diagram can cover, or on a nonzero remainder inside the certified
// region (total degree <= truncation - 2).
Decomposition decompose(const CharSeries& series);

} // namespace lcslab::charmod
