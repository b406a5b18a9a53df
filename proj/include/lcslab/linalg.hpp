#pragma once

#include "lcslab/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace lcslab::linalg {

using Vec = std::vector<Rat>;

// One row of a row-reduced matrix, stored sparsely (column, value) with
// strictly increasing columns.
struct SparseRow {
    std::vector<std::pair<std::uint32_t, Rat>> entries;
};

// A subspace of Q^ambient, stored as a reduced row echelon matrix against a
// fixed coordinate order: pivot entries are 1, pivot columns are zero in the
// other rows, pivots strictly increase downwards. Immutable once built.
class GradedSubspace {
public:
    GradedSubspace() = default;
    explicit GradedSubspace(std::size_t ambient) : ambient_(ambient) {}

    // The whole coordinate space (identity rref).
    static GradedSubspace full(std::size_t ambient);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<SparseRow>& rows() const { return rows_; }
    const std::vector<std::uint32_t>& pivot_cols() const { return pivots_; }

    Vec row_dense(std::size_t i) const;
    // Reduces v against the rref in place; v is in the subspace iff the
    // result is zero.
    void reduce(Vec& v) const;
    bool contains(const Vec& v) const;

    friend bool operator==(const GradedSubspace& a, const GradedSubspace& b);

private:
    std::size_t ambient_ = 0;
    std::vector<SparseRow> rows_;
    std::vector<std::uint32_t> pivots_;
    friend class RrefBuilder;
};

// Incremental reduced-row-echelon builder. Rows are processed in insertion
// order with first-nonzero pivoting, so results are deterministic.
class RrefBuilder {
public:
    explicit RrefBuilder(std::size_t ambient);

    // Consumes v (left in unspecified state). Returns true if the rank grew.
    bool add_row(Vec& v);
    bool add_sparse_row(const SparseRow& r);

    std::size_t dim() const { return rows_.size(); }
    std::size_t ambient_dim() const { return ambient_; }

    // Reduces v in place against the current rref.
    void reduce(Vec& v) const;

    GradedSubspace build() &&;

private:
    std::size_t ambient_;
    std::vector<SparseRow> rows_;       // kept sorted by pivot column
    std::vector<std::uint32_t> pivots_; // parallel to rows_
    std::vector<std::int32_t> pivot_row_of_col_;
};

GradedSubspace span(const std::vector<Vec>& vectors, std::size_t ambient);

bool contains(const GradedSubspace& s, const Vec& v);

// dim S - dim T, requiring T to be a subspace of S.
int quotient_dim(const GradedSubspace& s, const GradedSubspace& t);

GradedSubspace sum(const GradedSubspace& s, const GradedSubspace& t);

// dim S + dim T - dim(S + T)
int intersection_dim(const GradedSubspace& s, const GradedSubspace& t);

// Solves sum_i c_i columns[i] = target exactly. Returns nullopt if the
// system is inconsistent; throws if the solution is not unique.
std::optional<std::vector<Rat>> solve_exact(const std::vector<Vec>& columns, const Vec& target);

// Determinant of a square matrix by fraction Gaussian elimination.
Rat determinant(std::vector<Vec> m);

} // namespace lcslab::linalg
