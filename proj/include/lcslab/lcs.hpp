#pragma once

#include "lcslab/linalg.hpp"
#include "lcslab/ncalg.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace lcslab::lcs {

using ncalg::MultiDegree;
using ncalg::NcPoly;
using ncalg::Word;

struct DegreeCeilingError : std::runtime_error {
    explicit DegreeCeilingError(const std::string& msg) : std::runtime_error(msg) {}
};

// A free algebra, or its quotient by the monomial relations x_i^{m_i} = 0.
struct AlgebraSpec {
    int ngens = 2;
    std::vector<int> powers; // empty means free

    static AlgebraSpec free_algebra(int n) { return {n, {}}; }
    static AlgebraSpec with_powers(std::vector<int> m)
    {
        return {(int)m.size(), std::move(m)};
    }
    bool has_relations() const { return !powers.empty(); }
    std::string cache_key() const;
};

// Canonical monomial basis of one graded component A[d] (surviving words
// only, when relations are present), in lexicographic order.
struct WordBasis {
    std::vector<Word> words;
    std::unordered_map<Word, std::uint32_t, ncalg::WordHash> index;

    std::size_t size() const { return words.size(); }
    // Coordinates of a homogeneous polynomial supported on this component.
    linalg::Vec coords(const NcPoly& p) const;
    NcPoly poly_from_coords(int ngens, const linalg::Vec& v) const;
};

int default_degree_ceiling(); // LCSLAB_DEGREE_CEILING, defaults to 16

// Computes graded components of the lower central series L_1 = A,
// L_k = [A, L_{k-1}], the quotients B_k = L_k/L_{k+1}, and the explicit
// spanning machinery built on them. Components are memoized; all cached
// values are immutable, so an Engine may be shared across threads.
class Engine {
public:
    explicit Engine(int degree_ceiling = default_degree_ceiling());

    int degree_ceiling() const { return ceiling_; }

    std::shared_ptr<const WordBasis> word_basis(const AlgebraSpec& spec, const MultiDegree& d);

    const linalg::GradedSubspace& lcs_component(const AlgebraSpec& spec, int k,
                                                const MultiDegree& d);
    int l_dim(const AlgebraSpec& spec, int k, const MultiDegree& d);
    int b_dim(const AlgebraSpec& spec, int k, const MultiDegree& d);
    // sum of b_dim over all multidegrees of total degree l
    long long b_dim_total(const AlgebraSpec& spec, int k, int l);

    bool in_lcs(const AlgebraSpec& spec, int k, const NcPoly& p);

    // Unique coefficients c with p - sum c_i basis_i in L_3[d], for the
    // canonical basis of B_2 below. Throws if p is not in L_2[d].
    std::vector<Rat> express_in_b2_basis(const NcPoly& p, int n, const MultiDegree& d);

    // Graded component of the two-sided ideal A[[A,A],A]A.
    const linalg::GradedSubspace& triple_ideal_component(const AlgebraSpec& spec,
                                                         const MultiDegree& d);

    // Verifies the exact bracket identity producing 4[[x,y],[x^2,y]] and
    // that this element is nonzero modulo L_5[(3,2)].
    bool nonsplit_witness_check();

private:
    int ceiling_;
    mutable std::mutex mu_;
    std::map<std::string, std::shared_ptr<const WordBasis>> basis_cache_;
    std::map<std::string, std::shared_ptr<const linalg::GradedSubspace>> comp_cache_;
    std::map<std::string, std::shared_ptr<const linalg::GradedSubspace>> triple_cache_;

    void check_ceiling(const MultiDegree& d) const;
    std::shared_ptr<const linalg::GradedSubspace> component_ptr(const AlgebraSpec& spec, int k,
                                                                const MultiDegree& d);
};

// The 2^{n-2} brackets [x_{p(1)}^{i_{p(1)}} ... x_{p(n-1)}^{i_{p(n-1)}}, x_{p(n)}^{i_{p(n)}}]
// over the permutation family of pn_row_order(n); requires every entry of d
// to be at least 1 (drop unused generators first).
std::vector<NcPoly> canonical_b2_basis(int n, const MultiDegree& d);

// All componentwise splits d = e + f with e and f nonzero, in lexicographic
// order of e.
std::vector<std::pair<MultiDegree, MultiDegree>> proper_splits(const MultiDegree& d);

} // namespace lcslab::lcs
