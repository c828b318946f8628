#pragma once

// Dense matrices over GF(q) and the elimination routines built on them.

#include "covdepth/gf.hpp"

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace covdepth {

/// Row-major dense matrix over a Field.
class Matrix {
public:
    Matrix(Field field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Element> entries)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_) throw std::invalid_argument("matrix entry count mismatch");
        for (auto e : data_)
            if (!field_.contains(e)) throw std::out_of_range("matrix entry outside the field");
    }

    static Matrix from_rows(const Field& field, const std::vector<std::vector<Element>>& rows) {
        const std::size_t cols = rows.empty() ? 0 : rows.front().size();
        std::vector<Element> entries;
        entries.reserve(rows.size() * cols);
        for (const auto& r : rows) {
            if (r.size() != cols) throw std::invalid_argument("ragged rows");
            entries.insert(entries.end(), r.begin(), r.end());
        }
        return Matrix(field, rows.size(), cols, std::move(entries));
    }

    /// Columns given as length-`height` vectors.
    static Matrix from_columns(const Field& field, std::size_t height, const std::vector<std::vector<Element>>& cols) {
        Matrix m(field, height, cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (cols[c].size() != height) throw std::invalid_argument("column height mismatch");
            for (std::size_t r = 0; r < height; ++r) m.set(r, c, cols[c][r]);
        }
        return m;
    }

    static Matrix identity(const Field& field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Element operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Element at(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
        return (*this)(r, c);
    }
    void set(std::size_t r, std::size_t c, Element v) {
        if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
        if (!field_.contains(v)) throw std::out_of_range("matrix entry outside the field");
        (*this)(r, c) = v;
    }

    std::span<const Element> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<Element> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    const std::vector<Element>& entries() const { return data_; }

    std::vector<Element> column(std::size_t c) const {
        std::vector<Element> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
        return out;
    }

    std::vector<std::vector<Element>> columns() const {
        std::vector<std::vector<Element>> out;
        out.reserve(cols_);
        for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
        return out;
    }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    Matrix select_columns(std::span<const std::size_t> idx) const {
        Matrix out(field_, rows_, idx.size());
        for (std::size_t j = 0; j < idx.size(); ++j) {
            if (idx[j] >= cols_) throw std::out_of_range("column index");
            for (std::size_t r = 0; r < rows_; ++r) out(r, j) = (*this)(r, idx[j]);
        }
        return out;
    }

    Matrix scale_column(std::size_t c, Element factor) const {
        Matrix out = *this;
        for (std::size_t r = 0; r < rows_; ++r) out(r, c) = field_.mul(out(r, c), factor);
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
        if (!(a.field_ == b.field_)) throw std::invalid_argument("matrix product over different fields");
        const Field& f = a.field_;
        Matrix out(f, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t l = 0; l < a.cols_; ++l) {
                const Element x = a(i, l);
                if (x == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = f.add_raw(out(i, j), f.mul_raw(x, b(l, j)));
            }
        return out;
    }

    bool is_zero() const {
        for (auto e : data_)
            if (e != 0) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
    }

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Element> data_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by Gauss-Jordan elimination.
inline RrefResult rref(Matrix m) {
    const Field& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
        std::size_t piv = lead;
        while (piv < m.rows() && m(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != lead)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(lead, j));
        const Element scale = f.inv(m(lead, c));
        for (std::size_t j = c; j < m.cols(); ++j) m(lead, j) = f.mul_raw(m(lead, j), scale);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead || m(r, c) == 0) continue;
            const Element factor = f.neg_raw(m(r, c));
            for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.add_raw(m(r, j), f.mul_raw(factor, m(lead, j)));
        }
        pivots.push_back(c);
        ++lead;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

/// RREF with the zero rows dropped; equal outputs iff equal row spaces.
inline Matrix row_space_canonical(const Matrix& m) {
    auto [r, pivots] = rref(m);
    const std::size_t k = pivots.size();
    std::vector<Element> head(r.entries().begin(), r.entries().begin() + static_cast<std::ptrdiff_t>(k * r.cols()));
    return Matrix(m.field(), k, m.cols(), std::move(head));
}

/// Rows form a basis of {x : m x^T = 0}.
inline Matrix kernel_basis(const Matrix& m) {
    const Field& f = m.field();
    auto [r, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix out(f, free_cols.size(), m.cols());
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        const std::size_t fc = free_cols[i];
        out(i, fc) = 1;
        for (std::size_t j = 0; j < pivots.size(); ++j) out(i, pivots[j]) = f.neg_raw(r(j, fc));
    }
    return out;
}

/// Span of vectors in GF(q)^dim kept in semi-echelon form: basis vector j is
/// monic at pivot j and zero at every earlier pivot. Vectors are appended
/// only, so `truncate` undoes insertions in LIFO order.
class IncrementalSpan {
public:
    IncrementalSpan(Field field, std::size_t dim) : field_(std::move(field)), dim_(dim) {
        basis_.reserve(dim * dim);
        scratch_.resize(dim);
    }

    std::size_t dimension() const { return dim_; }
    std::size_t rank() const { return pivots_.size(); }
    bool full() const { return pivots_.size() == dim_; }

    /// Adds v; returns true iff it was outside the current span.
    bool insert(std::span<const Element> v) {
        if (!reduce(v)) return false;
        const std::size_t p = leading_index();
        const Element scale = field_.inv(scratch_[p]);
        for (std::size_t i = p; i < dim_; ++i) scratch_[i] = field_.mul_raw(scratch_[i], scale);
        basis_.insert(basis_.end(), scratch_.begin(), scratch_.end());
        pivots_.push_back(p);
        return true;
    }

    bool contains(std::span<const Element> v) { return !reduce(v); }

    void truncate(std::size_t r) {
        if (r > pivots_.size()) throw std::out_of_range("truncate beyond rank");
        pivots_.resize(r);
        basis_.resize(r * dim_);
    }

    void clear() { truncate(0); }

private:
    // Leaves the residual in scratch_; true iff nonzero.
    bool reduce(std::span<const Element> v) {
        if (v.size() != dim_) throw std::invalid_argument("vector length does not match span dimension");
        std::copy(v.begin(), v.end(), scratch_.begin());
        for (std::size_t j = 0; j < pivots_.size(); ++j) {
            const Element c = scratch_[pivots_[j]];
            if (c == 0) continue;
            const Element factor = field_.neg_raw(c);
            const Element* b = basis_.data() + j * dim_;
            for (std::size_t i = pivots_[j]; i < dim_; ++i)
                scratch_[i] = field_.add_raw(scratch_[i], field_.mul_raw(factor, b[i]));
        }
        for (auto x : scratch_)
            if (x != 0) return true;
        return false;
    }

    std::size_t leading_index() const {
        std::size_t p = 0;
        while (scratch_[p] == 0) ++p;
        return p;
    }

    Field field_;
    std::size_t dim_;
    std::vector<Element> basis_;
    std::vector<std::size_t> pivots_;
    std::vector<Element> scratch_;
};

/// Uniform random rows x cols matrix with rank min(rows, cols) when
/// full_rank is set (rejection sampling).
template <typename Urbg>
Matrix random_matrix(const Field& field, std::size_t rows, std::size_t cols, Urbg& rng, bool full_rank = true) {
    while (true) {
        Matrix m(field, rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<Element>(rng() % field.order());
        if (!full_rank || rank(m) == std::min(rows, cols)) return m;
    }
}

/// True iff v lies in the span of `vectors` (all of length v.size()).
inline bool in_span(const Field& field, const std::vector<std::vector<Element>>& vectors, std::span<const Element> v) {
    IncrementalSpan span(field, v.size());
    for (const auto& u : vectors) {
        if (u.size() != v.size()) throw std::invalid_argument("in_span: dimension mismatch");
        span.insert(u);
    }
    return span.contains(v);
}

}  // namespace covdepth
