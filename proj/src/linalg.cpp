#include "lcslab/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcslab::linalg {

GradedSubspace GradedSubspace::full(std::size_t ambient)
{
    GradedSubspace s(ambient);
    s.rows_.resize(ambient);
    s.pivots_.resize(ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
        s.rows_[i].entries.emplace_back((std::uint32_t)i, Rat(1));
        s.pivots_[i] = (std::uint32_t)i;
    }
    return s;
}

Vec GradedSubspace::row_dense(std::size_t i) const
{
    Vec v(ambient_, Rat());
    for (const auto& [c, x] : rows_[i].entries) v[c] = x;
    return v;
}

void GradedSubspace::reduce(Vec& v) const
{
    if (v.size() != ambient_) throw std::invalid_argument("GradedSubspace: ambient mismatch");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rat& c = v[pivots_[r]];
        if (c.is_zero()) continue;
        Rat factor = c; // pivot entry is 1
        for (const auto& [col, x] : rows_[r].entries) v[col] -= factor * x;
    }
}

bool GradedSubspace::contains(const Vec& v) const
{
    Vec w = v;
    reduce(w);
    for (const Rat& x : w)
        if (!x.is_zero()) return false;
    return true;
}

bool operator==(const GradedSubspace& a, const GradedSubspace& b)
{
    if (a.ambient_ != b.ambient_ || a.pivots_ != b.pivots_) return false;
    for (std::size_t i = 0; i < a.rows_.size(); ++i)
        if (a.rows_[i].entries != b.rows_[i].entries) return false;
    return true;
}

RrefBuilder::RrefBuilder(std::size_t ambient)
    : ambient_(ambient), pivot_row_of_col_(ambient, -1)
{
}

void RrefBuilder::reduce(Vec& v) const
{
    if (v.size() != ambient_) throw std::invalid_argument("RrefBuilder: ambient mismatch");
    for (std::size_t col = 0; col < ambient_; ++col) {
        if (v[col].is_zero()) continue;
        std::int32_t r = pivot_row_of_col_[col];
        if (r < 0) continue;
        Rat factor = v[col];
        for (const auto& [c, x] : rows_[r].entries) v[c] -= factor * x;
    }
}

bool RrefBuilder::add_row(Vec& v)
{
    if (v.size() != ambient_) throw std::invalid_argument("RrefBuilder: ambient mismatch");
    std::size_t pivot = ambient_;
    for (std::size_t col = 0; col < ambient_; ++col) {
        if (v[col].is_zero()) continue;
        std::int32_t r = pivot_row_of_col_[col];
        if (r < 0) {
            if (pivot == ambient_) pivot = col;
            continue; // keep reducing so no later pivot column survives
        }
        Rat factor = v[col];
        for (const auto& [c, x] : rows_[r].entries) v[c] -= factor * x;
    }
    if (pivot == ambient_) return false;

    // normalize so the pivot entry is 1
    Rat inv = v[pivot].inverse();
    SparseRow row;
    for (std::size_t col = pivot; col < ambient_; ++col)
        if (!v[col].is_zero()) row.entries.emplace_back((std::uint32_t)col, inv * v[col]);

    // eliminate the new pivot column from existing rows
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        auto& ents = rows_[r].entries;
        auto it = std::lower_bound(ents.begin(), ents.end(), (std::uint32_t)pivot,
                                   [](const auto& e, std::uint32_t c) { return e.first < c; });
        if (it == ents.end() || it->first != pivot) continue;
        Rat factor = it->second;
        // merge: ents -= factor * row
        std::vector<std::pair<std::uint32_t, Rat>> merged;
        merged.reserve(ents.size() + row.entries.size());
        std::size_t i = 0, j = 0;
        while (i < ents.size() || j < row.entries.size()) {
            if (j == row.entries.size() ||
                (i < ents.size() && ents[i].first < row.entries[j].first)) {
                merged.push_back(std::move(ents[i++]));
            } else if (i == ents.size() || row.entries[j].first < ents[i].first) {
                merged.emplace_back(row.entries[j].first, -(factor * row.entries[j].second));
                ++j;
            } else {
                Rat val = ents[i].second - factor * row.entries[j].second;
                if (!val.is_zero()) merged.emplace_back(ents[i].first, std::move(val));
                ++i;
                ++j;
            }
        }
        ents = std::move(merged);
    }

    // insert keeping pivot order
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), (std::uint32_t)pivot);
    std::size_t idx = (std::size_t)(pos - pivots_.begin());
    pivots_.insert(pos, (std::uint32_t)pivot);
    rows_.insert(rows_.begin() + idx, std::move(row));
    for (std::size_t col = 0; col < ambient_; ++col)
        if (pivot_row_of_col_[col] >= (std::int32_t)idx) ++pivot_row_of_col_[col];
    pivot_row_of_col_[pivot] = (std::int32_t)idx;
    return true;
}

bool RrefBuilder::add_sparse_row(const SparseRow& r)
{
    Vec v(ambient_, Rat());
    for (const auto& [c, x] : r.entries) v[c] = x;
    return add_row(v);
}

GradedSubspace RrefBuilder::build() &&
{
    GradedSubspace s(ambient_);
    s.rows_ = std::move(rows_);
    s.pivots_ = std::move(pivots_);
    return s;
}

GradedSubspace span(const std::vector<Vec>& vectors, std::size_t ambient)
{
    RrefBuilder b(ambient);
    for (const Vec& v : vectors) {
        if (v.size() != ambient) throw std::invalid_argument("span: ragged input");
        Vec w = v;
        b.add_row(w);
    }
    return std::move(b).build();
}

bool contains(const GradedSubspace& s, const Vec& v) { return s.contains(v); }

int quotient_dim(const GradedSubspace& s, const GradedSubspace& t)
{
    if (s.ambient_dim() != t.ambient_dim())
        throw std::invalid_argument("quotient_dim: ambient mismatch");
    for (std::size_t i = 0; i < t.dim(); ++i) {
        if (!s.contains(t.row_dense(i)))
            throw std::invalid_argument("quotient_dim: T is not contained in S");
    }
    return (int)s.dim() - (int)t.dim();
}

GradedSubspace sum(const GradedSubspace& s, const GradedSubspace& t)
{
    if (s.ambient_dim() != t.ambient_dim()) throw std::invalid_argument("sum: ambient mismatch");
    RrefBuilder b(s.ambient_dim());
    for (std::size_t i = 0; i < s.dim(); ++i) {
        Vec v = s.row_dense(i);
        b.add_row(v);
    }
    for (std::size_t i = 0; i < t.dim(); ++i) {
        Vec v = t.row_dense(i);
        b.add_row(v);
    }
    return std::move(b).build();
}

int intersection_dim(const GradedSubspace& s, const GradedSubspace& t)
{
    return (int)s.dim() + (int)t.dim() - (int)sum(s, t).dim();
}

std::optional<std::vector<Rat>> solve_exact(const std::vector<Vec>& columns, const Vec& target)
{
    const std::size_t m = columns.size();
    const std::size_t n = target.size();
    for (const auto& c : columns)
        if (c.size() != n) throw std::invalid_argument("solve_exact: ragged columns");

    // augmented rows: [A | target], eliminate by rows
    std::vector<Vec> rows(n, Vec(m + 1, Rat()));
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < n; ++i) rows[i][j] = columns[j][i];
    for (std::size_t i = 0; i < n; ++i) rows[i][m] = target[i];

    std::vector<std::size_t> pivot_rows;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m && rank < n; ++col) {
        std::size_t sel = n;
        for (std::size_t r = rank; r < n; ++r)
            if (!rows[r][col].is_zero()) {
                sel = r;
                break;
            }
        if (sel == n) continue;
        std::swap(rows[rank], rows[sel]);
        Rat inv = rows[rank][col].inverse();
        for (std::size_t j = col; j <= m; ++j) rows[rank][j] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            Rat f = rows[r][col];
            for (std::size_t j = col; j <= m; ++j) rows[r][j] -= f * rows[rank][j];
        }
        pivot_rows.push_back(col);
        ++rank;
    }
    if (pivot_rows.size() < m) throw std::invalid_argument("solve_exact: solution not unique");
    for (std::size_t r = rank; r < n; ++r)
        if (!rows[r][m].is_zero()) return std::nullopt;
    std::vector<Rat> sol(m);
    for (std::size_t k = 0; k < m; ++k) sol[k] = rows[k][m];
    return sol;
}

Rat determinant(std::vector<Vec> a)
{
    const std::size_t n = a.size();
    for (const auto& r : a)
        if (r.size() != n) throw std::invalid_argument("determinant: not square");
    Rat det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = n;
        for (std::size_t r = col; r < n; ++r)
            if (!a[r][col].is_zero()) {
                sel = r;
                break;
            }
        if (sel == n) return Rat();
        if (sel != col) {
            std::swap(a[sel], a[col]);
            det = -det;
        }
        det *= a[col][col];
        Rat inv = a[col][col].inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            Rat f = a[r][col] * inv;
            for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
        }
    }
    return det;
}

} // namespace lcslab::linalg
