#pragma once
// Exact linear algebra over the rationals: dense matrices, incremental sparse
// row reduction, canonical RREF, nullspaces and subspace comparison.
//
// Pivoting is deterministic: the pivot of each row is its first nonzero
// column, rows are taken in the order given. The reduced row-echelon form of
// a matrix is unique, so every result here is canonical regardless of how
// rows were fed in.

#include <biderlab/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace biderlab {

class MatrixQ {
public:
    MatrixQ() = default;
    MatrixQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    /// Builds from nested rows; every row must have the same length.
    static MatrixQ from_rows(const std::vector<Vector>& rows) {
        const std::size_t cols = rows.empty() ? 0 : rows.front().size();
        MatrixQ m(rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            require_same_size(rows[r].size(), cols, "matrix row length");
            std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
        }
        return m;
    }

    static MatrixQ identity(std::size_t n) {
        MatrixQ m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[index(r, c)]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[index(r, c)]; }

    std::span<const Rational> row(std::size_t r) const {
        if (r >= rows_) throw DimensionMismatch("row index out of range");
        return {data_.data() + r * cols_, cols_};
    }

    Vector row_vector(std::size_t r) const {
        auto s = row(r);
        return {s.begin(), s.end()};
    }

    Vector operator*(const Vector& v) const {
        require_same_size(cols_, v.size(), "matrix-vector product");
        Vector out = zero_vector(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (sgn(v[c]) != 0 && sgn((*this)(r, c)) != 0) out[r] += (*this)(r, c) * v[c];
        return out;
    }

    MatrixQ operator*(const MatrixQ& o) const {
        require_same_size(cols_, o.rows_, "matrix product");
        MatrixQ out(rows_, o.cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rational& a = (*this)(r, k);
                if (sgn(a) == 0) continue;
                for (std::size_t c = 0; c < o.cols_; ++c)
                    if (sgn(o(k, c)) != 0) out(r, c) += a * o(k, c);
            }
        return out;
    }

    friend bool operator==(const MatrixQ& a, const MatrixQ& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t index(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_)
            throw DimensionMismatch("matrix index (" + std::to_string(r) + ", " + std::to_string(c) +
                                    ") out of range");
        return r * cols_ + c;
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct SparseEntry {
    std::size_t col;
    Rational value;
};

/// Sorted by column, no explicit zeros.
using SparseRow = std::vector<SparseEntry>;

inline SparseRow to_sparse(std::span<const Rational> v) {
    SparseRow r;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) r.push_back({i, v[i]});
    return r;
}

inline Vector to_dense(const SparseRow& r, std::size_t n) {
    Vector v = zero_vector(n);
    for (const auto& e : r) v.at(e.col) = e.value;
    return v;
}

/// Incremental Gaussian elimination. Rows are reduced against the current
/// pivot rows as they arrive, so only the independent part is stored; a
/// dense scratch accumulator keeps each reduction linear in the row width.
class RowReducer {
public:
    explicit RowReducer(std::size_t cols) : cols_(cols), pivot_rows_(cols), scratch_(cols, Rational(0)) {}

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rank_; }

    /// Returns true if the row increased the rank.
    bool add_row(const SparseRow& row) {
        if (row.empty()) return false;
        std::size_t lo = cols_;
        std::size_t hi = 0;
        for (const auto& e : row) {
            if (e.col >= cols_) throw DimensionMismatch("sparse row column out of range");
            scratch_[e.col] = e.value;
            lo = std::min(lo, e.col);
            hi = std::max(hi, e.col + 1);
        }
        std::optional<std::size_t> lead;
        for (std::size_t c = lo; c < hi; ++c) {
            if (sgn(scratch_[c]) == 0) continue;
            const auto& p = pivot_rows_[c];
            if (!p) {
                if (!lead) lead = c;
                continue;
            }
            const Rational factor = scratch_[c];
            for (const auto& e : *p) {
                scratch_[e.col] -= factor * e.value;
                hi = std::max(hi, e.col + 1);
            }
        }
        if (!lead) return false; // scratch is already zero on [lo, hi)
        SparseRow stored;
        for (std::size_t c = lo; c < hi; ++c) {
            if (sgn(scratch_[c]) != 0) stored.push_back({c, scratch_[c]});
            scratch_[c] = 0;
        }
        if (stored.empty()) return false;
        const Rational inv = 1 / stored.front().value;
        for (auto& e : stored) e.value *= inv;
        pivot_rows_[stored.front().col] = std::move(stored);
        ++rank_;
        return true;
    }

    bool add_row(std::span<const Rational> dense) {
        require_same_size(dense.size(), cols_, "row width");
        return add_row(to_sparse(dense));
    }

    /// True if the row lies in the span of the rows added so far.
    bool in_span(const SparseRow& row) const {
        Vector acc = to_dense(row, cols_);
        for (std::size_t c = 0; c < cols_; ++c) {
            if (sgn(acc[c]) == 0) continue;
            const auto& p = pivot_rows_[c];
            if (!p) return false;
            const Rational factor = acc[c];
            for (const auto& e : *p) acc[e.col] -= factor * e.value;
        }
        return true;
    }

    /// Fully reduced rows ordered by pivot column.
    std::vector<SparseRow> reduced_rows() const {
        std::vector<std::optional<SparseRow>> done(cols_);
        Vector acc = zero_vector(cols_);
        for (std::size_t c = cols_; c-- > 0;) {
            const auto& p = pivot_rows_[c];
            if (!p) continue;
            std::size_t hi = c + 1;
            for (const auto& e : *p) {
                acc[e.col] = e.value;
                hi = std::max(hi, e.col + 1);
            }
            for (std::size_t k = c + 1; k < hi; ++k) {
                if (sgn(acc[k]) == 0 || !done[k]) continue;
                const Rational factor = acc[k];
                for (const auto& e : *done[k]) {
                    acc[e.col] -= factor * e.value;
                    hi = std::max(hi, e.col + 1);
                }
            }
            SparseRow r;
            for (std::size_t k = c; k < hi; ++k) {
                if (sgn(acc[k]) != 0) r.push_back({k, acc[k]});
                acc[k] = 0;
            }
            done[c] = std::move(r);
        }
        std::vector<SparseRow> out;
        out.reserve(rank_);
        for (auto& r : done)
            if (r) out.push_back(std::move(*r));
        return out;
    }

private:
    std::size_t cols_;
    std::size_t rank_ = 0;
    std::vector<std::optional<SparseRow>> pivot_rows_;
    Vector scratch_;
};

struct RrefResult {
    MatrixQ matrix;
    std::vector<std::size_t> pivots;
};

/// Unique reduced row-echelon form; zero rows at the bottom.
inline RrefResult rref(const MatrixQ& m) {
    RowReducer red(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) red.add_row(m.row(r));
    RrefResult out{MatrixQ(m.rows(), m.cols()), {}};
    const auto rows = red.reduced_rows();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        out.pivots.push_back(rows[r].front().col);
        for (const auto& e : rows[r]) out.matrix(r, e.col) = e.value;
    }
    return out;
}

inline std::size_t rank(const MatrixQ& m) {
    RowReducer red(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) red.add_row(m.row(r));
    return red.rank();
}

/// A linear subspace of Q^n stored by its canonical RREF basis, so two
/// subspaces are equal iff their stored bases are identical.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}

    static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
        RowReducer red(ambient_dim);
        for (const auto& v : vectors) red.add_row(std::span<const Rational>(v));
        return from_reducer(red);
    }

    static Subspace full(std::size_t n) {
        std::vector<Vector> basis;
        for (std::size_t i = 0; i < n; ++i) basis.push_back(unit_vector(n, i));
        return span(n, basis);
    }

    static Subspace from_reducer(const RowReducer& red) {
        Subspace s(red.cols());
        for (const auto& r : red.reduced_rows()) {
            s.pivots_.push_back(r.front().col);
            s.basis_.push_back(to_dense(r, red.cols()));
        }
        return s;
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    bool is_zero() const { return basis_.empty(); }
    const std::vector<Vector>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Coordinates of v against the stored basis, or nullopt if v is outside.
    std::optional<Vector> coordinates(const Vector& v) const {
        require_same_size(v.size(), ambient_, "subspace membership");
        Vector coords = zero_vector(dim());
        Vector rest = v;
        for (std::size_t k = 0; k < dim(); ++k) {
            coords[k] = rest[pivots_[k]];
            if (sgn(coords[k]) != 0) axpy(rest, -coords[k], basis_[k]);
        }
        if (!biderlab::is_zero(rest)) return std::nullopt;
        return coords;
    }

    bool contains(const Vector& v) const { return coordinates(v).has_value(); }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_;
    std::vector<Vector> basis_;
    std::vector<std::size_t> pivots_;
};

/// Canonical basis of {v : m v = 0} from the fully reduced rows of m.
inline Subspace kernel_from_reduced(std::size_t cols, const std::vector<SparseRow>& reduced) {
    std::vector<std::optional<std::size_t>> pivot_row(cols);
    for (std::size_t r = 0; r < reduced.size(); ++r) pivot_row[reduced[r].front().col] = r;
    // column-wise view of the reduced rows: for each free column, the pivots it feeds
    std::vector<std::vector<std::pair<std::size_t, Rational>>> by_col(cols);
    for (const auto& row : reduced) {
        const std::size_t p = row.front().col;
        for (std::size_t k = 1; k < row.size(); ++k) by_col[row[k].col].emplace_back(p, row[k].value);
    }
    RowReducer red(cols);
    for (std::size_t f = 0; f < cols; ++f) {
        if (pivot_row[f]) continue;
        SparseRow v;
        for (const auto& [p, val] : by_col[f]) v.push_back({p, -val});
        v.push_back({f, Rational(1)});
        std::sort(v.begin(), v.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.col < b.col; });
        red.add_row(v);
    }
    return Subspace::from_reducer(red);
}

inline Subspace kernel_basis(const RowReducer& red) { return kernel_from_reduced(red.cols(), red.reduced_rows()); }

inline Subspace kernel_basis(const MatrixQ& m) {
    RowReducer red(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) red.add_row(m.row(r));
    return kernel_basis(red);
}

/// One solution of A x = b given the reduced rows of [A | b] (width cols + 1),
/// with free variables set to zero; nullopt if inconsistent.
inline std::optional<Vector> particular_solution(const RowReducer& augmented) {
    const std::size_t cols = augmented.cols() - 1;
    Vector x = zero_vector(cols);
    for (const auto& row : augmented.reduced_rows()) {
        const std::size_t p = row.front().col;
        if (p == cols) return std::nullopt;
        if (row.back().col == cols) x[p] = row.back().value;
    }
    return x;
}

inline bool subspace_contains(const Subspace& outer, const Subspace& inner) {
    require_same_size(outer.ambient_dim(), inner.ambient_dim(), "subspace ambient dimension");
    for (const auto& v : inner.basis())
        if (!outer.contains(v)) return false;
    return true;
}

inline bool subspace_equal(const Subspace& a, const Subspace& b) {
    require_same_size(a.ambient_dim(), b.ambient_dim(), "subspace ambient dimension");
    return a.basis() == b.basis();
}

inline Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    require_same_size(a.ambient_dim(), b.ambient_dim(), "subspace ambient dimension");
    std::vector<Vector> all = a.basis();
    all.insert(all.end(), b.basis().begin(), b.basis().end());
    return Subspace::span(a.ambient_dim(), all);
}

} // namespace biderlab
