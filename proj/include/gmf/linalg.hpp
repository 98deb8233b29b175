#pragma once

// Dense exact linear algebra over a coefficient field: echelon forms, rank,
// null spaces, and solving. Rows are equations, columns are unknowns.

#include "gmf/field.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace gmf {

template <Coefficient K>
using Vec = std::vector<K>;

template <Coefficient K>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec<K> row(std::size_t i) const { return Vec<K>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

    static DenseMatrix from_columns(const std::vector<Vec<K>>& cols, std::size_t rows) {
        DenseMatrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        return m;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<K> data_;
};

/// Reduced row echelon form, computed in place. Returns the pivot columns.
template <Coefficient K>
std::vector<std::size_t> rref(DenseMatrix<K>& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        K inv = m(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            K f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero()) m(i, j) = m(i, j) - f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <Coefficient K>
std::size_t rank(DenseMatrix<K> m) {
    return rref(m).size();
}

/// Basis of {x : m x = 0}.
template <Coefficient K>
std::vector<Vec<K>> nullspace(DenseMatrix<K> m, const Field& f) {
    auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec<K>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec<K> x(m.cols());
        x[free] = K::from_int(f, 1);
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m(r, free);
        basis.push_back(std::move(x));
    }
    return basis;
}

/// Some x with m x = b, or nullopt.
template <Coefficient K>
std::optional<Vec<K>> solve(const DenseMatrix<K>& m, const Vec<K>& b) {
    DenseMatrix<K> aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    Vec<K> x(m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
    return x;
}

/// Incrementally maintained echelon basis of a subspace of K^n.
template <Coefficient K>
class Span {
public:
    explicit Span(std::size_t n) : n_(n) {}

    std::size_t ambient_dim() const { return n_; }
    std::size_t dim() const { return rows_.size(); }

    /// Remainder of v after reduction against the current basis.
    Vec<K> reduce(Vec<K> v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const K& c = v[pivots_[r]];
            if (c.is_zero()) continue;
            K f = c;
            for (std::size_t j = pivots_[r]; j < n_; ++j)
                if (!rows_[r][j].is_zero()) v[j] = v[j] - f * rows_[r][j];
        }
        return v;
    }

    bool contains(const Vec<K>& v) const {
        auto r = reduce(v);
        return std::all_of(r.begin(), r.end(), [](const K& x) { return x.is_zero(); });
    }

    /// Adds v; returns true when it enlarged the span.
    bool insert(const Vec<K>& v) {
        Vec<K> r = reduce(v);
        std::size_t p = 0;
        while (p < n_ && r[p].is_zero()) ++p;
        if (p == n_) return false;
        K inv = r[p].inverse();
        for (std::size_t j = p; j < n_; ++j) r[j] = r[j] * inv;
        // keep rows fully reduced so reduce() is a single pass
        for (auto& row : rows_) {
            if (row[p].is_zero()) continue;
            K f = row[p];
            for (std::size_t j = p; j < n_; ++j)
                if (!r[j].is_zero()) row[j] = row[j] - f * r[j];
        }
        auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
        pivots_.insert(pivots_.begin() + pos, p);
        rows_.insert(rows_.begin() + pos, std::move(r));
        return true;
    }

private:
    std::size_t n_;
    std::vector<std::size_t> pivots_;
    std::vector<Vec<K>> rows_;
};

template <Coefficient K>
bool is_zero_vector(const Vec<K>& v) {
    return std::all_of(v.begin(), v.end(), [](const K& x) { return x.is_zero(); });
}

}  // namespace gmf
