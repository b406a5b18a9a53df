#pragma once

#include "lcslab/derham.hpp"
#include "lcslab/lcs.hpp"
#include "lcslab/ncalg.hpp"

#include <vector>

namespace lcslab::fs {

using derham::DiffForm;
using lcs::AlgebraSpec;
using ncalg::MultiDegree;
using ncalg::NcPoly;
using ncalg::Word;

// The homomorphism from the free algebra to even forms under the Fedosov
// product: generators map to coordinate functions and words are evaluated by
// folding the Fedosov product over their letters.
DiffForm phi(const NcPoly& p, int n);
DiffForm phi_word(const Word& w, int n);

// For p in L_2: checks d(phi(p)) == 0 and that phi(p) has no 0-form part.
// Throws if p is not in L_2.
bool phi_closed_check(const NcPoly& p, int n, lcs::Engine& eng);

// Per-level output of the B_2 pipeline for quotients by even-form relations.
// Levels run over total degree 0..cutoff-1. When the odd cohomology vanishes
// everywhere in the reported range, value[D] is dim B_2 at filtration level D
// (the dimension of exact even positive-degree forms). Otherwise value[D] is
// only an upper bound, namely dim H^odd at level D; the quotient by the
// (uncomputed) image of cyclic homology is not taken.
struct B2Table {
    int cutoff = 0;
    bool identified = false;
    std::vector<int> h_odd;   // indexed by level
    std::vector<int> h_even;  // indexed by level
    std::vector<int> value;   // B_2 dims, or upper bounds when !identified
};

B2Table pseudosmooth_b2_dims(int nvars, const std::vector<DiffForm>& relations, int cutoff);

// dim(A[d]/T[d]) == dim of the even part of R(A)[d], where T is the ideal of
// triple commutators; free algebras and monomial-relation quotients.
bool tripcom_check(const AlgebraSpec& spec, const MultiDegree& d, lcs::Engine& eng);

// dim of the image of [A,A][d] in A[d]/T[d] == dim of exact even forms at d.
bool imd_check(const AlgebraSpec& spec, const MultiDegree& d, lcs::Engine& eng);

// dim ker( wedge^2 A[d] / W(A)[d] -> [A,A][d] ), with W(A) spanned by
// ab^c + bc^a + ca^b over monomials.
int hc1_dim(const AlgebraSpec& spec, const MultiDegree& d, lcs::Engine& eng);

} // namespace lcslab::fs
