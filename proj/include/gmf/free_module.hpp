#pragma once

#include "gmf/expression.hpp"

#include <sstream>

namespace gmf {

/// Graded free module ⊕_j B(-g_j); generator j sits in degree g_j.
class GradedFreeModule {
public:
    GradedFreeModule() = default;
    explicit GradedFreeModule(std::vector<int> gen_degrees) : degs_(std::move(gen_degrees)) {}

    std::size_t rank() const { return degs_.size(); }
    const std::vector<int>& degrees() const { return degs_; }
    int degree(std::size_t j) const { return degs_[j]; }

    /// M(q): generator degrees drop by q.
    GradedFreeModule twist(int q) const {
        std::vector<int> d = degs_;
        for (auto& g : d) g -= q;
        return GradedFreeModule(std::move(d));
    }

    GradedFreeModule direct_sum(const GradedFreeModule& o) const {
        std::vector<int> d = degs_;
        d.insert(d.end(), o.degs_.begin(), o.degs_.end());
        return GradedFreeModule(std::move(d));
    }

    friend bool operator==(const GradedFreeModule&, const GradedFreeModule&) = default;

private:
    std::vector<int> degs_;
};

struct EntryViolation {
    std::size_t row, col;
    int expected_degree;
    std::string reason;
};

struct MatrixReport {
    bool valid = true;
    std::vector<EntryViolation> violations;
};

/// Homogeneous map source -> target(δ). Entry (i,j) is zero or homogeneous of
/// degree g^src_j - g^tgt_i + δ.
template <Coefficient K>
class GradedMatrix {
public:
    GradedMatrix() = default;

    GradedMatrix(GradedFreeModule source, GradedFreeModule target, int degree)
        : src_(std::move(source)), tgt_(std::move(target)), deg_(degree), entries_(src_.rank() * tgt_.rank()) {}

    GradedMatrix(GradedFreeModule source, GradedFreeModule target, int degree, std::vector<Polynomial<K>> row_major)
        : src_(std::move(source)), tgt_(std::move(target)), deg_(degree), entries_(std::move(row_major)) {
        if (entries_.size() != src_.rank() * tgt_.rank()) throw InputError("matrix: entry count does not match module ranks");
    }

    static GradedMatrix identity(const GradedFreeModule& m, const Field& f) {
        return scalar(m, Polynomial<K>::constant(K::from_int(f, 1)));
    }

    /// c·Id on m; the degree is that of c (0 for the zero polynomial).
    static GradedMatrix scalar(const GradedFreeModule& m, const Polynomial<K>& c) {
        GradedMatrix r(m, m, c.degree().value_or(0));
        for (std::size_t i = 0; i < m.rank(); ++i) r(i, i) = c;
        return r;
    }

    const GradedFreeModule& source() const { return src_; }
    const GradedFreeModule& target() const { return tgt_; }
    int degree() const { return deg_; }
    std::size_t rows() const { return tgt_.rank(); }
    std::size_t cols() const { return src_.rank(); }

    Polynomial<K>& operator()(std::size_t i, std::size_t j) { return entries_[i * cols() + j]; }
    const Polynomial<K>& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols() + j]; }
    const std::vector<Polynomial<K>>& entries() const { return entries_; }

    int entry_degree(std::size_t i, std::size_t j) const { return src_.degree(j) - tgt_.degree(i) + deg_; }

    bool is_zero() const {
        return std::all_of(entries_.begin(), entries_.end(), [](const auto& p) { return p.is_zero(); });
    }

    /// Same entries, new bookkeeping (used by shift, which re-reads degrees).
    GradedMatrix reinterpret(GradedFreeModule source, GradedFreeModule target, int degree) const {
        return GradedMatrix(std::move(source), std::move(target), degree, entries_);
    }

    GradedMatrix operator+(const GradedMatrix& o) const {
        require_same_shape(o);
        GradedMatrix r = *this;
        for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] += o.entries_[k];
        return r;
    }
    GradedMatrix operator-(const GradedMatrix& o) const {
        require_same_shape(o);
        GradedMatrix r = *this;
        for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] -= o.entries_[k];
        return r;
    }
    GradedMatrix operator-() const {
        GradedMatrix r = *this;
        for (auto& e : r.entries_) e = -e;
        return r;
    }
    GradedMatrix operator*(const K& c) const {
        GradedMatrix r = *this;
        for (auto& e : r.entries_) e = e * c;
        return r;
    }

    /// Submatrix keeping the given rows and columns (module bookkeeping follows).
    GradedMatrix select(const std::vector<std::size_t>& rows_keep, const std::vector<std::size_t>& cols_keep) const {
        std::vector<int> sd, td;
        for (auto j : cols_keep) sd.push_back(src_.degree(j));
        for (auto i : rows_keep) td.push_back(tgt_.degree(i));
        GradedMatrix r(GradedFreeModule(sd), GradedFreeModule(td), deg_);
        for (std::size_t a = 0; a < rows_keep.size(); ++a)
            for (std::size_t b = 0; b < cols_keep.size(); ++b) r(a, b) = (*this)(rows_keep[a], cols_keep[b]);
        return r;
    }

    friend bool operator==(const GradedMatrix& a, const GradedMatrix& b) {
        return a.src_ == b.src_ && a.tgt_ == b.tgt_ && a.deg_ == b.deg_ && a.entries_ == b.entries_;
    }

private:
    void require_same_shape(const GradedMatrix& o) const {
        if (!(src_ == o.src_) || !(tgt_ == o.tgt_) || deg_ != o.deg_)
            throw InputError("matrix: shape or degree mismatch in addition");
    }

    GradedFreeModule src_, tgt_;
    int deg_ = 0;
    std::vector<Polynomial<K>> entries_;
};

template <Coefficient K>
MatrixReport validate_matrix(const GradedMatrix<K>& m) {
    MatrixReport rep;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const auto& e = m(i, j);
            if (e.is_zero()) continue;
            int want = m.entry_degree(i, j);
            if (!e.is_homogeneous())
                rep.violations.push_back({i, j, want, "entry is not homogeneous"});
            else if (*e.degree() != want)
                rep.violations.push_back({i, j, want, "entry has degree " + std::to_string(*e.degree())});
        }
    rep.valid = rep.violations.empty();
    return rep;
}

/// f ∘ g. Requires source(f) == target(g).
template <Coefficient K>
GradedMatrix<K> matrix_compose(const GradedMatrix<K>& f, const GradedMatrix<K>& g) {
    if (!(f.source() == g.target()))
        throw InputError("matrix_compose: source of the left factor does not match target of the right factor");
    GradedMatrix<K> r(g.source(), f.target(), f.degree() + g.degree());
    for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t k = 0; k < f.cols(); ++k) {
            const auto& a = f(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < g.cols(); ++j) {
                const auto& b = g(k, j);
                if (!b.is_zero()) r(i, j) += a * b;
            }
        }
    return r;
}

/// Shorthand for matrix_compose.
template <Coefficient K>
GradedMatrix<K> operator*(const GradedMatrix<K>& f, const GradedMatrix<K>& g) {
    return matrix_compose(f, g);
}

/// [[a, b], [c, d]] with blocks given row-major; shapes must agree.
template <Coefficient K>
GradedMatrix<K> block_matrix(const GradedMatrix<K>& a, const GradedMatrix<K>& b, const GradedMatrix<K>& c,
                             const GradedMatrix<K>& d) {
    if (!(a.source() == c.source()) || !(b.source() == d.source()) || !(a.target() == b.target()) ||
        !(c.target() == d.target()) || a.degree() != b.degree() || a.degree() != c.degree() || a.degree() != d.degree())
        throw InputError("block_matrix: incompatible blocks");
    GradedMatrix<K> r(a.source().direct_sum(b.source()), a.target().direct_sum(c.target()), a.degree());
    std::size_t r0 = a.rows(), c0 = a.cols();
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j) {
            const GradedMatrix<K>& blk = i < r0 ? (j < c0 ? a : b) : (j < c0 ? c : d);
            r(i, j) = blk(i < r0 ? i : i - r0, j < c0 ? j : j - c0);
        }
    return r;
}

template <Coefficient K>
GradedMatrix<K> direct_sum(const GradedMatrix<K>& a, const GradedMatrix<K>& b) {
    if (a.degree() != b.degree()) throw InputError("direct_sum: degree mismatch");
    return block_matrix(a, GradedMatrix<K>(b.source(), a.target(), a.degree()),
                        GradedMatrix<K>(a.source(), b.target(), a.degree()), b);
}

/// Horizontal concatenation [a | b] (same target and degree).
template <Coefficient K>
GradedMatrix<K> hconcat(const GradedMatrix<K>& a, const GradedMatrix<K>& b) {
    if (!(a.target() == b.target()) || a.degree() != b.degree()) throw InputError("hconcat: incompatible blocks");
    GradedMatrix<K> r(a.source().direct_sum(b.source()), a.target(), a.degree());
    for (std::size_t i = 0; i < r.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
    }
    return r;
}

/// Same matrix with source and target twisted by q (entries unchanged).
template <Coefficient K>
GradedMatrix<K> twist(const GradedMatrix<K>& m, int q) {
    return m.reinterpret(m.source().twist(q), m.target().twist(q), m.degree());
}

template <Coefficient K>
std::vector<std::vector<std::string>> matrix_strings(const GradedMatrix<K>& m, const GradedRing& ring) {
    std::vector<std::vector<std::string>> out(m.rows(), std::vector<std::string>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = to_string(m(i, j), ring);
    return out;
}

template <Coefficient K>
std::string describe(const GradedMatrix<K>& m, const GradedRing& ring) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << to_string(m(i, j), ring);
    }
    os << "]";
    return os.str();
}

}  // namespace gmf
