#pragma once

// Degreewise bases of graded free modules and of quotients F/U, used to turn
// module-theoretic questions into finite linear systems.

#include "gmf/groebner.hpp"
#include "gmf/linalg.hpp"

#include <map>

namespace gmf {

/// Basis {(generator, monomial)} of the degree-e part of a free module.
class FreeSlice {
public:
    FreeSlice(const GradedRing& ring, const GradedFreeModule& m, int e) {
        for (std::size_t j = 0; j < m.rank(); ++j)
            for (const auto& mono : ring.monomials_of_degree(e - m.degree(j))) {
                index_[{j, mono.exp}] = basis_.size();
                basis_.emplace_back(j, mono);
            }
    }

    std::size_t dim() const { return basis_.size(); }
    const std::pair<std::size_t, Monomial>& operator[](std::size_t k) const { return basis_[k]; }

    template <Coefficient K>
    Vec<K> coords(const ModVec<K>& v) const {
        Vec<K> out(dim());
        for (const auto& t : v.terms()) out[index_.at({t.pos, t.mono.exp})] = t.coeff;
        return out;
    }

private:
    std::vector<std::pair<std::size_t, Monomial>> basis_;
    std::map<std::pair<std::size_t, std::array<std::uint16_t, kMaxVars>>, std::size_t> index_;
};

/// Matrix of a degree-δ map from the degree-e slice of its source to the
/// degree-(e+δ) slice of its target.
template <Coefficient K>
DenseMatrix<K> slice_matrix(const GradedMatrix<K>& f, const GradedRing& ring, int e) {
    FreeSlice src(ring, f.source(), e), tgt(ring, f.target(), e + f.degree());
    DenseMatrix<K> m(tgt.dim(), src.dim());
    for (std::size_t c = 0; c < src.dim(); ++c) {
        auto [j, mono] = src[c];
        std::vector<ModTerm<K>> ts;
        for (std::size_t i = 0; i < f.rows(); ++i)
            for (const auto& t : f(i, j).terms()) ts.push_back({i, t.mono * mono, t.coeff});
        auto v = tgt.coords(ModVec<K>::from_terms(std::move(ts)));
        for (std::size_t r = 0; r < tgt.dim(); ++r) m(r, c) = v[r];
    }
    return m;
}

/// The graded module F/U for a homogeneous submodule U. Degree-e bases are
/// the standard terms of a Gröbner basis of U; coordinates come from normal
/// forms. Bases are cached per instance.
template <Coefficient K>
class QuotientModule {
public:
    QuotientModule(const GradedRing& ring, GradedFreeModule ambient, const std::vector<ModVec<K>>& relations)
        : ring_(&ring), gb_(groebner(ring, ambient, relations)) {}

    const GradedFreeModule& ambient() const { return gb_.ambient(); }
    const GroebnerBasis<K>& basis_of_relations() const { return gb_; }

    const std::vector<std::pair<std::size_t, Monomial>>& basis(int e) const {
        auto it = cache_.find(e);
        if (it != cache_.end()) return it->second.terms;
        Entry ent;
        for (std::size_t j = 0; j < ambient().rank(); ++j)
            for (const auto& mono : ring_->monomials_of_degree(e - ambient().degree(j))) {
                bool standard = true;
                for (const auto& g : gb_.elements())
                    if (g.lead().pos == j && g.lead().mono.divides(mono)) {
                        standard = false;
                        break;
                    }
                if (standard) {
                    ent.index[{j, mono.exp}] = ent.terms.size();
                    ent.terms.emplace_back(j, mono);
                }
            }
        return cache_.emplace(e, std::move(ent)).first->second.terms;
    }

    std::size_t dim(int e) const { return basis(e).size(); }

    /// Coordinates of the class of a homogeneous degree-e vector.
    Vec<K> coords(const ModVec<K>& v, int e) const {
        basis(e);
        const auto& idx = cache_.at(e).index;
        Vec<K> out(dim(e));
        auto r = gb_.reduce(v);
        for (const auto& t : r.terms()) out[idx.at({t.pos, t.mono.exp})] = t.coeff;
        return out;
    }

    /// Representative (a combination of standard terms) of a coordinate vector.
    ModVec<K> element(const Vec<K>& c, int e) const {
        const auto& b = basis(e);
        std::vector<ModTerm<K>> ts;
        for (std::size_t k = 0; k < b.size(); ++k)
            if (!c[k].is_zero()) ts.push_back({b[k].first, b[k].second, c[k]});
        return ModVec<K>::from_terms(std::move(ts));
    }

private:
    struct Entry {
        std::vector<std::pair<std::size_t, Monomial>> terms;
        std::map<std::pair<std::size_t, std::array<std::uint16_t, kMaxVars>>, std::size_t> index;
    };

    const GradedRing* ring_;
    GroebnerBasis<K> gb_;
    mutable std::map<int, Entry> cache_;
};

}  // namespace gmf
