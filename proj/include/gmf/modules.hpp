#pragma once

// Finitely generated graded modules over B and over A = B/W, given by
// presentations: Hilbert functions, tails, syzygies, Ext against A, Hom and
// stable Hom, Hom in the singularity category, and the Gorenstein parameter.

#include "gmf/quotient.hpp"
#include "gmf/resolution.hpp"

#include <memory>

namespace gmf {

/// How a "maximal Cohen-Macaulay" (Ext-vanishing) claim is backed.
enum class Certification {
    none,
    structural,  // cokernel of a matrix factorization
    exact,       // projective dimension over B checked to be <= 1
    window,      // Ext^i(M, A) = 0 checked for 1 <= i <= i_max in a degree window
    violated,
};

inline std::string to_string(Certification c) {
    switch (c) {
        case Certification::none: return "none";
        case Certification::structural: return "structural";
        case Certification::exact: return "exact";
        case Certification::window: return "window";
        case Certification::violated: return "violated";
    }
    return "none";
}

template <Coefficient K>
class ModulePresentation {
public:
    ModulePresentation(GradedRing ring, GradedFreeModule gens, GradedMatrix<K> relations,
                       std::optional<Polynomial<K>> potential = std::nullopt)
        : ring_(std::move(ring)), gens_(std::move(gens)), rels_(std::move(relations)), W_(std::move(potential)) {
        if (!(rels_.target() == gens_)) throw InputError("module: relation matrix target differs from the generators");
        if (rels_.degree() != 0) throw InputError("module: relation matrix must have degree 0");
        detail::require_homogeneous(rels_, "module");
        if (W_ && (W_->is_zero() || !W_->is_homogeneous()))
            throw InputError("module: the potential must be nonzero and homogeneous");
    }

    static ModulePresentation free(const GradedRing& ring, const GradedFreeModule& gens,
                                   std::optional<Polynomial<K>> potential = std::nullopt) {
        return ModulePresentation(ring, gens, GradedMatrix<K>(GradedFreeModule(), gens, 0), std::move(potential));
    }

    const GradedRing& ring() const { return ring_; }
    const GradedFreeModule& generators() const { return gens_; }
    const GradedMatrix<K>& relations() const { return rels_; }
    bool over_A() const { return W_.has_value(); }
    const std::optional<Polynomial<K>>& potential() const { return W_; }
    const Polynomial<K>* potential_ptr() const { return W_ ? &*W_ : nullptr; }

    Certification mcm_certificate() const { return cert_; }
    ModulePresentation with_certificate(Certification c) const {
        ModulePresentation r = *this;
        r.cert_ = c;
        return r;
    }

    /// Relations as a B-module, W·e_j appended when over A.
    GradedMatrix<K> effective_relations() const {
        if (!W_) return rels_;
        return hconcat(rels_, potential_block(gens_, *W_));
    }

    std::vector<ModVec<K>> relation_vectors() const {
        auto eff = effective_relations();
        std::vector<ModVec<K>> out;
        for (std::size_t j = 0; j < eff.cols(); ++j) out.push_back(ModVec<K>::from_column(eff, j));
        return out;
    }

    ModulePresentation twist(int q) const {
        ModulePresentation r(ring_, gens_.twist(q), gmf::twist(rels_, q), W_);
        r.cert_ = cert_;
        return r;
    }

private:
    GradedRing ring_;
    GradedFreeModule gens_;
    GradedMatrix<K> rels_;
    std::optional<Polynomial<K>> W_;
    Certification cert_ = Certification::none;
};

/// k = B/(x_1, ..., x_n), generated in degree 0.
template <Coefficient K>
ModulePresentation<K> residue_field(const GradedRing& ring, std::optional<Polynomial<K>> potential = std::nullopt) {
    std::vector<Polynomial<K>> xs;
    for (std::size_t i = 0; i < ring.num_vars(); ++i)
        xs.push_back(Polynomial<K>::monomial(ring.variable(i), K::from_int(ring.field(), 1)));
    GradedFreeModule G({0});
    GradedMatrix<K> R(GradedFreeModule(std::vector<int>(ring.weights())), G, 0, std::move(xs));
    return ModulePresentation<K>(ring, G, R, std::move(potential));
}

/// Degree-0 module map given by images of generators (columns live in the
/// target's free cover).
template <Coefficient K>
struct ModuleMap {
    std::shared_ptr<const ModulePresentation<K>> source, target;
    GradedMatrix<K> matrix;
};

template <class Morphism>
struct HomSpace {
    std::vector<Morphism> basis;
    Certification certification = Certification::none;
    std::vector<std::string> warnings;
    std::size_t dimension() const { return basis.size(); }
};

/// dim_k M_e for e in [lo, hi]: rank of the cokernel of the degree-e slice of
/// the (effective) relation matrix.
template <Coefficient K>
std::vector<std::size_t> hilbert_function(const ModulePresentation<K>& M, int lo, int hi) {
    if (hi < lo) throw InputError("hilbert_function: empty degree window");
    auto rel = M.effective_relations();
    std::vector<std::size_t> out;
    for (int e = lo; e <= hi; ++e) {
        FreeSlice F(M.ring(), M.generators(), e);
        std::size_t r = F.dim() == 0 ? 0 : rank(slice_matrix(rel, M.ring(), e));
        out.push_back(F.dim() - r);
    }
    return out;
}

/// Presentation with unit relations pivoted away and redundant relations dropped.
template <Coefficient K>
ModulePresentation<K> minimize(const ModulePresentation<K>& M) {
    auto R = minimize_presentation(M.relations(), M.ring(), M.potential_ptr());
    return ModulePresentation<K>(M.ring(), R.target(), R, M.potential()).with_certificate(M.mcm_certificate());
}

/// Presentation of the tail M_{>=p}.
template <Coefficient K>
ModulePresentation<K> truncate_tail(const ModulePresentation<K>& M, int p) {
    const auto& ring = M.ring();
    K one = K::from_int(ring.field(), 1);
    std::vector<ModVec<K>> gens;
    std::vector<int> degs;
    for (std::size_t j = 0; j < M.generators().rank(); ++j) {
        int g = M.generators().degree(j);
        if (g >= p) {
            gens.push_back(ModVec<K>::unit(j, one));
            degs.push_back(g);
            continue;
        }
        for (int e = p; e < p + ring.max_weight(); ++e)
            for (const auto& m : ring.monomials_of_degree(e - g)) {
                gens.push_back(ModVec<K>::from_terms({{j, m, one}}));
                degs.push_back(e);
            }
    }
    auto phi = columns_to_matrix(gens, M.generators(), degs);
    // relations: u with phi(u) in the image of the effective relations
    auto elems = detail::kernel_elements(hconcat(phi, M.effective_relations()), ring);
    std::vector<ModVec<K>> rels;
    std::vector<int> rdeg;
    for (const auto& el : elems) {
        auto u = el.restrict_positions(0, gens.size());
        if (u.is_zero()) continue;
        rels.push_back(u);
        rdeg.push_back(u.degree(degs));
    }
    GradedFreeModule F(degs);
    auto R = columns_to_matrix(rels, F, rdeg);
    return minimize(ModulePresentation<K>(ring, F, R, M.potential()));
}

/// Minimal free resolution of M (over A when M is an A-module).
template <Coefficient K>
std::vector<GradedMatrix<K>> resolve(const ModulePresentation<K>& M, int steps) {
    return minimal_resolution(M.relations(), steps, M.ring(), M.potential_ptr());
}

/// Ω^k M, presented by the (k+1)-st differential of a minimal resolution.
template <Coefficient K>
ModulePresentation<K> syzygy_module(const ModulePresentation<K>& M, int k) {
    if (k < 0) throw InputError("syzygy_module: negative depth");
    if (k == 0) return M;
    auto res = resolve(M, k + 1);
    if (static_cast<int>(res.size()) < k) return ModulePresentation<K>::free(M.ring(), GradedFreeModule(), M.potential());
    const auto& dk = res[static_cast<std::size_t>(k - 1)];
    if (static_cast<int>(res.size()) == k) return ModulePresentation<K>::free(M.ring(), dk.source(), M.potential());
    return ModulePresentation<K>(M.ring(), dk.source(), res[static_cast<std::size_t>(k)], M.potential());
}

/// Projective dimension of M over B is at most 1 (for an A-module: M is
/// maximal Cohen-Macaulay, equivalently Ext^i_A(M, A) = 0 for i > 0).
template <Coefficient K>
bool is_mcm(const ModulePresentation<K>& M) {
    auto d1 = minimize_presentation(M.effective_relations(), M.ring());
    return kernel(d1, M.ring()).cols() == 0;
}

/// dim Ext^i_A(M, A)_e for i = 0..i_max and e in [lo, hi].
struct ExtTable {
    int lo = 0, hi = 0;
    std::vector<std::vector<std::size_t>> dims;  // dims[i][e - lo]

    bool vanishes(int i) const {
        return std::all_of(dims[static_cast<std::size_t>(i)].begin(), dims[static_cast<std::size_t>(i)].end(),
                           [](std::size_t d) { return d == 0; });
    }
};

namespace detail {

/// Default window for Ext computations: every degree where Hom(F_i, A) could
/// carry a class in the computed range.
inline std::pair<int, int> ext_window(const std::vector<GradedFreeModule>& frees, int d, int weight_sum) {
    int maxg = 0, ming = 0;
    bool first = true;
    for (const auto& F : frees)
        for (int g : F.degrees()) {
            maxg = first ? g : std::max(maxg, g);
            ming = first ? g : std::min(ming, g);
            first = false;
        }
    return {-maxg - 1, -ming + 2 * d + weight_sum};
}

}  // namespace detail

template <Coefficient K>
ExtTable ext_against_A(const ModulePresentation<K>& M, int i_max, std::optional<std::pair<int, int>> window = std::nullopt) {
    if (!M.over_A()) throw InputError("ext_against_A: module is not over A");
    const auto& ring = M.ring();
    const auto& W = *M.potential();
    auto res = resolve(M, i_max + 1);
    // free modules F_0 .. F_{i_max+1}; missing ones are zero
    std::vector<GradedFreeModule> frees;
    frees.push_back(res.empty() ? M.generators() : res[0].target());
    for (std::size_t k = 0; k <= static_cast<std::size_t>(i_max); ++k)
        frees.push_back(k < res.size() ? res[k].source() : GradedFreeModule());
    auto [lo, hi] = window.value_or(detail::ext_window(frees, *W.degree(), ring.weight_sum()));

    QuotientModule<K> A(ring, GradedFreeModule({0}), potential_multiples(GradedFreeModule({0}), W));
    K one = K::from_int(ring.field(), 1);
    // dual map Hom(F_k, A)_e -> Hom(F_{k+1}, A)_e, φ ↦ φ∘d_{k+1}
    auto dual = [&](std::size_t k, int e) {
        const auto& Fk = frees[k];
        const auto& Fn = frees[k + 1];
        std::vector<std::size_t> src_off, tgt_off;
        std::size_t ns = 0, nt = 0;
        for (int g : Fk.degrees()) src_off.push_back(std::exchange(ns, ns + A.dim(g + e)));
        for (int g : Fn.degrees()) tgt_off.push_back(std::exchange(nt, nt + A.dim(g + e)));
        DenseMatrix<K> m(nt, ns);
        if (k >= res.size() || ns == 0 || nt == 0) return m;
        const auto& d = res[k];
        for (std::size_t j = 0; j < Fk.rank(); ++j) {
            const auto& basis = A.basis(Fk.degree(j) + e);
            for (std::size_t b = 0; b < basis.size(); ++b) {
                for (std::size_t c = 0; c < Fn.rank(); ++c) {
                    if (d(j, c).is_zero()) continue;
                    auto prod = d(j, c).times_monomial(basis[b].second, one);
                    std::vector<ModTerm<K>> ts;
                    for (const auto& t : prod.terms()) ts.push_back({0, t.mono, t.coeff});
                    auto v = A.coords(ModVec<K>::from_terms(std::move(ts)), Fn.degree(c) + e);
                    for (std::size_t r = 0; r < v.size(); ++r) m(tgt_off[c] + r, src_off[j] + b) = v[r];
                }
            }
        }
        return m;
    };
    ExtTable t;
    t.lo = lo;
    t.hi = hi;
    t.dims.assign(static_cast<std::size_t>(i_max + 1), {});
    for (int e = lo; e <= hi; ++e) {
        std::size_t prev_rank = 0;
        for (std::size_t i = 0; i <= static_cast<std::size_t>(i_max); ++i) {
            auto out = dual(i, e);
            std::size_t r_out = rank(out);
            std::size_t dim_i = 0;
            for (int g : frees[i].degrees()) dim_i += A.dim(g + e);
            t.dims[i].push_back(dim_i - r_out - prev_rank);
            prev_rank = r_out;
        }
    }
    return t;
}

namespace detail {

/// Linear description of Hom_{gr}(M, N): unknowns are coordinates of the
/// images of M's generators in N (standard-term bases).
template <Coefficient K>
struct HomSystem {
    std::shared_ptr<QuotientModule<K>> target;
    std::vector<std::size_t> offsets;
    std::size_t unknowns = 0;
    std::vector<Vec<K>> solutions;
};

template <Coefficient K>
HomSystem<K> hom_system(const ModulePresentation<K>& M, const ModulePresentation<K>& N) {
    const auto& ring = M.ring();
    HomSystem<K> hs;
    hs.target = std::make_shared<QuotientModule<K>>(ring, N.generators(), N.relation_vectors());
    const auto& QN = *hs.target;
    for (int g : M.generators().degrees()) hs.offsets.push_back(std::exchange(hs.unknowns, hs.unknowns + QN.dim(g)));
    auto rel = M.effective_relations();
    std::vector<Vec<K>> rows;
    for (std::size_t c = 0; c < rel.cols(); ++c) {
        int deg = rel.source().degree(c);
        std::size_t nc = QN.dim(deg);
        if (nc == 0) continue;
        std::vector<Vec<K>> cols(hs.unknowns, Vec<K>(nc));
        for (std::size_t j = 0; j < M.generators().rank(); ++j) {
            if (rel(j, c).is_zero()) continue;
            const auto& basis = QN.basis(M.generators().degree(j));
            for (std::size_t b = 0; b < basis.size(); ++b) {
                std::vector<ModTerm<K>> ts;
                for (const auto& t : rel(j, c).terms()) ts.push_back({basis[b].first, t.mono * basis[b].second, t.coeff});
                cols[hs.offsets[j] + b] = QN.coords(ModVec<K>::from_terms(std::move(ts)), deg);
            }
        }
        for (std::size_t r = 0; r < nc; ++r) {
            Vec<K> row(hs.unknowns);
            for (std::size_t u = 0; u < hs.unknowns; ++u) row[u] = cols[u][r];
            rows.push_back(std::move(row));
        }
    }
    DenseMatrix<K> eq(rows.size(), hs.unknowns);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t u = 0; u < hs.unknowns; ++u) eq(r, u) = rows[r][u];
    hs.solutions = nullspace(eq, ring.field());
    return hs;
}

template <Coefficient K>
GradedMatrix<K> map_matrix(const HomSystem<K>& hs, const Vec<K>& x, const GradedFreeModule& src) {
    std::vector<ModVec<K>> cols;
    for (std::size_t j = 0; j < src.rank(); ++j) {
        int g = src.degree(j);
        Vec<K> part(x.begin() + static_cast<long>(hs.offsets[j]), x.begin() + static_cast<long>(hs.offsets[j] + hs.target->dim(g)));
        cols.push_back(hs.target->element(part, g));
    }
    return columns_to_matrix(cols, hs.target->ambient(), src.degrees());
}

}  // namespace detail

/// All degree-0 homomorphisms M -> N.
template <Coefficient K>
HomSpace<ModuleMap<K>> module_hom(const ModulePresentation<K>& M, const ModulePresentation<K>& N) {
    auto hs = detail::hom_system(M, N);
    auto sp = std::make_shared<const ModulePresentation<K>>(M);
    auto tp = std::make_shared<const ModulePresentation<K>>(N);
    HomSpace<ModuleMap<K>> out;
    for (const auto& x : hs.solutions) out.basis.push_back({sp, tp, detail::map_matrix(hs, x, M.generators())});
    return out;
}

/// Backing for the Ext-vanishing precondition of stable Hom.
template <Coefficient K>
Certification certify_mcm(const ModulePresentation<K>& M) {
    if (M.mcm_certificate() == Certification::structural || M.mcm_certificate() == Certification::exact)
        return M.mcm_certificate();
    return is_mcm(M) ? Certification::exact : Certification::violated;
}

/// Degree-0 maps M -> N modulo those factoring through a projective module,
/// realised as the image of Hom(M, F) for the free cover F of N.
template <Coefficient K>
HomSpace<ModuleMap<K>> stable_hom(const ModulePresentation<K>& M, const ModulePresentation<K>& N) {
    if (!M.over_A() || !N.over_A()) throw InputError("stable_hom: both modules must be A-modules");
    HomSpace<ModuleMap<K>> out;
    out.certification = certify_mcm(M);
    if (out.certification == Certification::violated)
        out.warnings.push_back("source is not maximal Cohen-Macaulay; Ext^i(M, A) != 0 for some i > 0");
    auto hs = detail::hom_system(M, N);
    auto cover = ModulePresentation<K>::free(M.ring(), N.generators(), M.potential());
    auto hf = detail::hom_system(M, cover);
    Span<K> R(hs.unknowns);
    for (const auto& x : hf.solutions) {
        Vec<K> y(hs.unknowns);
        for (std::size_t j = 0; j < M.generators().rank(); ++j) {
            int g = M.generators().degree(j);
            Vec<K> part(x.begin() + static_cast<long>(hf.offsets[j]), x.begin() + static_cast<long>(hf.offsets[j] + hf.target->dim(g)));
            auto v = hs.target->coords(hf.target->element(part, g), g);
            std::copy(v.begin(), v.end(), y.begin() + static_cast<long>(hs.offsets[j]));
        }
        R.insert(y);
    }
    auto sp = std::make_shared<const ModulePresentation<K>>(M);
    auto tp = std::make_shared<const ModulePresentation<K>>(N);
    for (const auto& x : hs.solutions)
        if (R.insert(x)) out.basis.push_back({sp, tp, detail::map_matrix(hs, x, M.generators())});
    return out;
}

/// Depth at which syzygies of M become maximal Cohen-Macaulay.
template <Coefficient K>
int mcm_depth(const ModulePresentation<K>& M, ModulePresentation<K>* syzygy = nullptr) {
    int cap = static_cast<int>(M.ring().num_vars()) + 2;
    ModulePresentation<K> cur = minimize(M);
    for (int k = 0; k <= cap; ++k) {
        if (cur.mcm_certificate() == Certification::structural || is_mcm(cur)) {
            if (syzygy) *syzygy = cur;
            return k;
        }
        cur = syzygy_module(cur, 1);
    }
    throw MathError("syzygy depth cap exceeded: no maximal Cohen-Macaulay syzygy within " + std::to_string(cap) + " steps");
}

/// Hom(M, N[p]) in the graded singularity category, computed as stable Hom
/// from Ω^k M to Ω^(k-p) N, k the least depth >= p with Ω^k M maximal
/// Cohen-Macaulay.
template <Coefficient K>
HomSpace<ModuleMap<K>> dsing_hom(const ModulePresentation<K>& M, const ModulePresentation<K>& N, int p) {
    if (!M.over_A() || !N.over_A()) throw InputError("dsing_hom: both modules must be A-modules");
    ModulePresentation<K> Mm = M;
    int dm = mcm_depth(M, &Mm);
    int k = std::max({p, 0, dm});
    for (int s = dm; s < k; ++s) Mm = syzygy_module(Mm, 1);
    auto Nm = syzygy_module(minimize(N), k - p);
    Mm = Mm.with_certificate(Certification::exact);
    HomSpace<ModuleMap<K>> out;
    if (Mm.generators().rank() == 0 || Nm.generators().rank() == 0) {
        out.certification = Certification::exact;
        out.warnings.push_back("syzygy is the zero module; Hom space is zero");
        return out;
    }
    out = stable_hom(Mm, Nm);
    return out;
}

/// a = Σ weights - deg W (or Σ weights for B itself).
template <Coefficient K>
int gorenstein_parameter(const GradedRing& ring, const Polynomial<K>* W) {
    if (!W) return ring.weight_sum();
    if (W->is_zero()) throw InputError("gorenstein_parameter: potential is zero");
    if (!W->is_homogeneous()) throw InputError("gorenstein_parameter: potential is not homogeneous");
    return ring.weight_sum() - *W->degree();
}

}  // namespace gmf
