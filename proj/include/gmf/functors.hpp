#pragma once

// The cokernel functor from matrix factorizations to graded A-modules, its
// quasi-inverse on objects, and cross-checks between the two sides.

#include "gmf/mf.hpp"

namespace gmf {

template <Coefficient K>
struct CokResult {
    ModulePresentation<K> module;
    std::shared_ptr<const MatrixFactorization<K>> source;
    Certification certificate = Certification::structural;
};

/// Coker(p1) as an A-module, generated by P0.
template <Coefficient K>
CokResult<K> cok(const MatrixFactorization<K>& X) {
    auto rep = mf_validate(X);
    if (!rep.valid) throw MathError("cok: invalid matrix factorization: " + rep.failures.front());
    ModulePresentation<K> M(X.ring(), X.P0(), X.p1(), X.potential());
    return {M.with_certificate(Certification::structural), std::make_shared<const MatrixFactorization<K>>(X),
            Certification::structural};
}

/// Induced map Coker(p1) -> Coker(q1), given by f0 on generators.
template <Coefficient K>
ModuleMap<K> cok_on_morphism(const MFMorphism<K>& f) {
    if (!is_morphism(f)) throw MathError("cok_on_morphism: not a morphism of matrix factorizations");
    auto s = std::make_shared<const ModulePresentation<K>>(cok(*f.source).module);
    auto t = std::make_shared<const ModulePresentation<K>>(cok(*f.target).module);
    return {s, t, f.f0};
}

/// g ∘ f on representatives.
template <Coefficient K>
ModuleMap<K> compose(const ModuleMap<K>& g, const ModuleMap<K>& f) {
    return {f.source, g.target, g.matrix * f.matrix};
}

/// Equality as maps of modules: the difference lands in the relations of the target.
template <Coefficient K>
bool module_maps_equal(const ModuleMap<K>& a, const ModuleMap<K>& b) {
    if (!(a.matrix.source() == b.matrix.source()) || !(a.matrix.target() == b.matrix.target())) return false;
    auto diff = a.matrix - b.matrix;
    if (diff.is_zero()) return true;
    return image_contains(a.target->effective_relations(), diff, a.target->ring());
}

template <Coefficient K>
bool module_map_is_zero(const ModuleMap<K>& f) {
    if (f.matrix.is_zero()) return true;
    return image_contains(f.target->effective_relations(), f.matrix, f.target->ring());
}

struct AcyclicReport {
    bool exact = true;
    int lo = 0, hi = 0;
    std::vector<std::string> failures;
};

/// Exactness of ... -> P1 -> P0 -> P1(d) -> ... tensored with A, degree by degree.
template <Coefficient K>
AcyclicReport check_acyclic_tensor(const MatrixFactorization<K>& X, int lo, int hi) {
    AcyclicReport rep;
    rep.lo = lo;
    rep.hi = hi;
    const auto& ring = X.ring();
    const auto& W = X.potential();
    QuotientModule<K> A1(ring, X.P1(), potential_multiples(X.P1(), W));
    QuotientModule<K> A0(ring, X.P0(), potential_multiples(X.P0(), W));
    K one = K::from_int(ring.field(), 1);
    // matrix of f : S -> T(δ) from S_e to T_{e+δ}
    auto slice = [&](const GradedMatrix<K>& f, const QuotientModule<K>& S, const QuotientModule<K>& T, int e) {
        const auto& bs = S.basis(e);
        DenseMatrix<K> m(T.dim(e + f.degree()), bs.size());
        for (std::size_t c = 0; c < bs.size(); ++c) {
            std::vector<ModTerm<K>> ts;
            for (std::size_t i = 0; i < f.rows(); ++i) {
                auto prod = f(i, bs[c].first).times_monomial(bs[c].second, one);
                for (const auto& t : prod.terms()) ts.push_back({i, t.mono, t.coeff});
            }
            auto v = T.coords(ModVec<K>::from_terms(std::move(ts)), e + f.degree());
            for (std::size_t r = 0; r < v.size(); ++r) m(r, c) = v[r];
        }
        return m;
    };
    auto composite_zero = [&](const GradedMatrix<K>& c, const char* name) {
        auto red = reduce_mod(c, W);
        if (!red.is_zero()) rep.failures.push_back(std::string(name) + " is not zero modulo W");
    };
    composite_zero(X.p0() * X.p1(), "p0*p1");
    composite_zero(X.p1() * X.p0(), "p1*p0");
    int d = X.d();
    for (int e = lo; e <= hi; ++e) {
        std::size_t r1 = rank(slice(X.p1(), A1, A0, e));
        std::size_t r0 = rank(slice(X.p0(), A0, A1, e));
        std::size_t r0prev = rank(slice(X.p0(), A0, A1, e - d));
        if (A0.dim(e) - r0 != r1)
            rep.failures.push_back("not exact at P0 in degree " + std::to_string(e) + ": kernel " +
                                   std::to_string(A0.dim(e) - r0) + ", image " + std::to_string(r1));
        if (A1.dim(e) - r1 != r0prev)
            rep.failures.push_back("not exact at P1 in degree " + std::to_string(e) + ": kernel " +
                                   std::to_string(A1.dim(e) - r1) + ", image " + std::to_string(r0prev));
    }
    rep.exact = rep.failures.empty();
    return rep;
}

template <Coefficient K>
struct StabilizeResult {
    MatrixFactorization<K> mf;
    int depth = 0;
};

/// Matrix factorization whose cokernel is stably isomorphic to a syzygy of M:
/// p1 presents the first maximal Cohen-Macaulay syzygy over B, p0 lifts W·Id
/// through p1, and contractible summands are split off.
template <Coefficient K>
StabilizeResult<K> stabilize(const ModulePresentation<K>& M) {
    if (!M.over_A()) throw InputError("stabilize: module is not over A");
    const auto& ring = M.ring();
    const auto& W = *M.potential();
    if (M.generators().rank() == 0) return {MatrixFactorization<K>::zero(ring, W), 0};
    ModulePresentation<K> S = M;
    int depth = mcm_depth(M, &S);
    auto p1 = minimize_presentation(S.effective_relations(), ring);
    if (p1.rows() != p1.cols())
        throw MathError("stabilize: presentation of the syzygy is not square (" + std::to_string(p1.rows()) + "x" +
                        std::to_string(p1.cols()) + ")");
    if (p1.rows() == 0) return {MatrixFactorization<K>::zero(ring, W), depth};
    auto p0 = lift(GradedMatrix<K>::scalar(p1.target(), W), p1, ring);
    MatrixFactorization<K> X(ring, W, p1, p0);
    auto rep = mf_validate(X);
    if (!rep.valid) throw MathError("stabilize: lifted factorization fails validation: " + rep.failures.front());
    return {mf_minimize(X), depth};
}

struct FullFaithRow {
    int shift = 0;
    std::size_t mf_dim = 0, dsing_dim = 0;
    bool equal() const { return mf_dim == dsing_dim; }
};

struct FullFaithReport {
    std::vector<FullFaithRow> rows;
    bool passed() const {
        return std::all_of(rows.begin(), rows.end(), [](const FullFaithRow& r) { return r.equal(); });
    }
};

/// dim Hom(X, Y[p]) against dim Hom_{D_sing}(Cok X, Cok Y[p]).
template <Coefficient K>
FullFaithReport check_full_faithfulness(const MatrixFactorization<K>& X, const MatrixFactorization<K>& Y,
                                        const std::vector<int>& shifts) {
    FullFaithReport rep;
    auto cx = cok(X).module, cy = cok(Y).module;
    for (int p : shifts) rep.rows.push_back({p, mf_hom_dimension(X, Y, p), dsing_hom(cx, cy, p).dimension()});
    return rep;
}

template <Coefficient K>
struct RoundTripReport {
    MatrixFactorization<K> minimal, recovered;
    int depth = 0;
    IsoResult<K> iso;
    bool passed() const { return iso.found(); }
};

/// stabilize(Cok X) against X with contractible summands split off.
template <Coefficient K>
RoundTripReport<K> check_round_trip(const MatrixFactorization<K>& X, std::uint64_t seed = 1) {
    auto Xmin = mf_minimize(X);
    auto st = stabilize(cok(X).module);
    auto iso = mf_is_isomorphic(st.mf, Xmin, seed);
    return {Xmin, st.mf, st.depth, iso};
}

}  // namespace gmf
