#pragma once

// Minimal presentations and minimal graded free resolutions over B, and over
// A = B/W by carrying W-multiples of the generators as implicit relations.

#include "gmf/groebner.hpp"

namespace gmf {

/// Remainder of p modulo the principal ideal (W).
template <Coefficient K>
Polynomial<K> reduce_mod(Polynomial<K> p, const Polynomial<K>& W) {
    if (W.is_zero()) return p;
    const auto& lt = W.leading();
    std::vector<Term<K>> rem;
    while (!p.is_zero()) {
        const auto& t = p.leading();
        if (lt.mono.divides(t.mono)) {
            p -= W.times_monomial(lt.mono.quotient_of(t.mono), t.coeff / lt.coeff);
        } else {
            rem.push_back(t);
            p = Polynomial<K>::from_terms(std::vector<Term<K>>(p.terms().begin() + 1, p.terms().end()));
        }
    }
    return Polynomial<K>::from_terms(std::move(rem));
}

template <Coefficient K>
GradedMatrix<K> reduce_mod(GradedMatrix<K> m, const Polynomial<K>& W) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = reduce_mod(m(i, j), W);
    return m;
}

/// The vectors W·e_j of a free module.
template <Coefficient K>
std::vector<ModVec<K>> potential_multiples(const GradedFreeModule& m, const Polynomial<K>& W) {
    std::vector<ModVec<K>> out;
    for (std::size_t j = 0; j < m.rank(); ++j) {
        std::vector<ModTerm<K>> ts;
        for (const auto& t : W.terms()) ts.push_back({j, t.mono, t.coeff});
        out.push_back(ModVec<K>::from_terms(std::move(ts)));
    }
    return out;
}

/// W·Id on m, as a degree-0 map m(-d) -> m.
template <Coefficient K>
GradedMatrix<K> potential_block(const GradedFreeModule& m, const Polynomial<K>& W) {
    int d = W.degree().value_or(0);
    GradedMatrix<K> r(m.twist(-d), m, 0);
    for (std::size_t i = 0; i < m.rank(); ++i) r(i, i) = W;
    return r;
}

namespace detail {

/// All Gröbner kernel elements of f (a generating set, not minimized).
template <Coefficient K>
std::vector<ModVec<K>> kernel_elements(const GradedMatrix<K>& f, const GradedRing& ring) {
    require_homogeneous(f, "kernel");
    GroebnerBasis<K> gb = graph_basis(f, ring);
    std::size_t r = f.rows();
    std::vector<ModVec<K>> ker;
    for (const auto& g : gb.elements())
        if (g.lead().pos >= r) ker.push_back(g.restrict_positions(r, r + f.cols()));
    return ker;
}

template <Coefficient K>
ModVec<K> reduce_mod(const ModVec<K>& v, const Polynomial<K>& W, std::size_t rank) {
    std::vector<ModTerm<K>> ts;
    for (std::size_t i = 0; i < rank; ++i) {
        auto r = gmf::reduce_mod(v.component(i), W);
        for (const auto& t : r.terms()) ts.push_back({i, t.mono, t.coeff});
    }
    return ModVec<K>::from_terms(std::move(ts));
}

template <Coefficient K>
std::optional<std::pair<std::size_t, std::size_t>> first_unit(const GradedMatrix<K>& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j).is_constant()) return std::pair{i, j};
    return std::nullopt;
}

}  // namespace detail

/// Minimal presentation of coker(R) (over A when W is given): unit entries
/// are pivoted out (lexicographically first unit each round, deleting its row
/// and column), then a minimal subset of the relation columns is kept.
template <Coefficient K>
GradedMatrix<K> minimize_presentation(GradedMatrix<K> R, const GradedRing& ring, const Polynomial<K>* W = nullptr) {
    detail::require_homogeneous(R, "minimize_presentation");
    if (R.degree() != 0) throw InputError("minimize_presentation: relation matrix must have degree 0");
    while (auto unit = detail::first_unit(R)) {
        auto [i, j] = *unit;
        K inv = R(i, j).leading().coeff.inverse();
        for (std::size_t c = 0; c < R.cols(); ++c) {
            if (c == j || R(i, c).is_zero()) continue;
            Polynomial<K> f = R(i, c) * inv;
            for (std::size_t k = 0; k < R.rows(); ++k)
                if (!R(k, j).is_zero()) R(k, c) -= R(k, j) * f;
        }
        std::vector<std::size_t> rows, cols;
        for (std::size_t k = 0; k < R.rows(); ++k)
            if (k != i) rows.push_back(k);
        for (std::size_t k = 0; k < R.cols(); ++k)
            if (k != j) cols.push_back(k);
        R = R.select(rows, cols);
    }
    if (W) R = reduce_mod(R, *W);
    std::vector<ModVec<K>> cols;
    for (std::size_t j = 0; j < R.cols(); ++j) cols.push_back(ModVec<K>::from_column(R, j));
    std::vector<ModVec<K>> seed;
    if (W) seed = potential_multiples(R.target(), *W);
    auto keep = minimal_generators(ring, R.target(), cols, seed);
    std::vector<std::size_t> all_rows(R.rows());
    std::iota(all_rows.begin(), all_rows.end(), 0);
    return R.select(all_rows, keep);
}

/// Minimal generators of the kernel of d viewed as a map of free A-modules
/// (A = B/W), with entries reduced modulo W.
template <Coefficient K>
GradedMatrix<K> kernel_over_quotient(const GradedMatrix<K>& d, const Polynomial<K>& W, const GradedRing& ring) {
    auto aug = hconcat(d, potential_block(d.target(), W));
    auto elems = detail::kernel_elements(aug, ring);
    std::vector<ModVec<K>> proj;
    for (const auto& e : elems) proj.push_back(detail::reduce_mod(e.restrict_positions(0, d.cols()), W, d.cols()));
    auto keep = minimal_generators(ring, d.source(), proj, potential_multiples(d.source(), W));
    std::vector<ModVec<K>> cols;
    std::vector<int> degs;
    for (auto i : keep) {
        cols.push_back(proj[i]);
        degs.push_back(proj[i].degree(d.source().degrees()));
    }
    return columns_to_matrix(cols, d.source(), degs);
}

/// d_1, ..., d_s with d_k : F_k -> F_{k-1}, s <= steps. Over B the list stops
/// early once a kernel vanishes; over A (W given) it stops only when the
/// module has become free.
template <Coefficient K>
std::vector<GradedMatrix<K>> minimal_resolution(const GradedMatrix<K>& pres, int steps, const GradedRing& ring,
                                                const Polynomial<K>* W = nullptr) {
    std::vector<GradedMatrix<K>> out;
    if (steps <= 0) return out;
    out.push_back(minimize_presentation(pres, ring, W));
    while (static_cast<int>(out.size()) < steps) {
        const auto& d = out.back();
        GradedMatrix<K> next = W ? kernel_over_quotient(d, *W, ring) : kernel(d, ring);
        if (next.cols() == 0) break;
        out.push_back(std::move(next));
    }
    return out;
}

}  // namespace gmf
