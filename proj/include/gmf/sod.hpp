#pragma once

// Exceptional objects and collections in the homotopy category of matrix
// factorizations, the dual collection of a finite-dimensional A, the algebra
// of a collection, and the sign-of-a classification.

#include "gmf/functors.hpp"

namespace gmf {

struct ExceptionalityReport {
    HomTable table;
    bool exceptional = false;
    bool certified = false;
    std::vector<std::string> reasons;
};

template <Coefficient K>
ExceptionalityReport check_exceptional(const MatrixFactorization<K>& E, int lo, int hi) {
    if (lo > 0 || hi < 0) throw InputError("check_exceptional: shift range must contain 0");
    ExceptionalityReport rep;
    rep.table = mf_hom_table(E, E, lo, hi, true);
    if (rep.table.at(0) != 1) rep.reasons.push_back("dim End = " + std::to_string(rep.table.at(0)));
    for (int p = lo; p <= hi; ++p)
        if (p != 0 && rep.table.at(p) != 0)
            rep.reasons.push_back("Hom(E, E[" + std::to_string(p) + "]) has dimension " + std::to_string(rep.table.at(p)));
    rep.exceptional = rep.reasons.empty();
    rep.certified = rep.exceptional && rep.table.certified;
    if (rep.exceptional && !rep.table.certified) rep.reasons.push_back("vanishing outside the range not certified: " + rep.table.note);
    return rep;
}

struct CollectionReport {
    std::vector<std::vector<HomTable>> tables;  // tables[i][j]: Hom(E_i, E_j[p])
    std::vector<bool> exceptional;
    bool semiorthogonal = false;
    bool strong_checked = false, strong = false;
    bool certified = false;
    std::vector<std::string> reasons;

    bool is_exceptional_collection() const {
        return semiorthogonal && std::all_of(exceptional.begin(), exceptional.end(), [](bool b) { return b; });
    }
};

template <Coefficient K>
CollectionReport check_collection(const std::vector<MatrixFactorization<K>>& Es, int lo, int hi, bool strong,
                                  unsigned threads = 1) {
    if (lo > 0 || hi < 0) throw InputError("check_collection: shift range must contain 0");
    CollectionReport rep;
    std::size_t n = Es.size();
    rep.tables.assign(n, std::vector<HomTable>(n));
    bool cert = true;
    auto cells = parallel_map(n * n, threads, [&](std::size_t c) { return mf_hom_table(Es[c / n], Es[c % n], lo, hi, true); });
    for (std::size_t c = 0; c < n * n; ++c) {
        rep.tables[c / n][c % n] = cells[c];
        cert = cert && cells[c].certified;
    }
    rep.semiorthogonal = true;
    rep.strong_checked = strong;
    rep.strong = strong;
    for (std::size_t i = 0; i < n; ++i) {
        bool ex = true;
        for (int p = lo; p <= hi; ++p)
            if (rep.tables[i][i].at(p) != (p == 0 ? 1u : 0u)) ex = false;
        rep.exceptional.push_back(ex);
        if (!ex) rep.reasons.push_back("E_" + std::to_string(i) + " is not exceptional");
        for (std::size_t j = 0; j < n; ++j)
            for (int p = lo; p <= hi; ++p) {
                std::size_t dim = rep.tables[i][j].at(p);
                if (dim == 0) continue;
                std::string cell = "Hom(E_" + std::to_string(i) + ", E_" + std::to_string(j) + "[" + std::to_string(p) + "]) = " +
                                   std::to_string(dim);
                if (i > j) {
                    rep.semiorthogonal = false;
                    rep.reasons.push_back(cell);
                } else if (strong && p != 0 && i != j) {
                    rep.strong = false;
                    rep.reasons.push_back(cell + " (not strong)");
                }
            }
    }
    if (strong && !rep.is_exceptional_collection()) rep.strong = false;
    rep.certified = cert && rep.is_exceptional_collection();
    if (!cert) rep.reasons.push_back("some Hom tables are not certified outside the range");
    return rep;
}

/// Whether A = B/W is finite-dimensional.
template <Coefficient K>
bool finite_dimensional(const GradedRing& ring, const Polynomial<K>& W) {
    QuotientModule<K> A(ring, GradedFreeModule({0}), potential_multiples(GradedFreeModule({0}), W));
    int run = 0;
    for (int e = 0; e <= *W.degree() + ring.max_weight(); ++e) {
        run = A.dim(e) == 0 ? run + 1 : 0;
        if (run == ring.max_weight()) return true;
    }
    return false;
}

/// E_i = A(i+a+1)/A(i+a+1)_{>=s} for i = 0..-a-1; s defaults to -a.
template <Coefficient K>
std::vector<ModulePresentation<K>> dual_collection(const GradedRing& ring, const Polynomial<K>& W,
                                                   std::optional<int> truncation = std::nullopt) {
    if (!finite_dimensional(ring, W)) throw InputError("dual_collection: A is not finite-dimensional");
    int a = gorenstein_parameter(ring, &W);
    int s = truncation.value_or(-a);
    K one = K::from_int(ring.field(), 1);
    std::vector<ModulePresentation<K>> out;
    for (int i = 0; i <= -a - 1; ++i) {
        int g = -(i + a + 1);
        GradedFreeModule G({g});
        std::vector<ModVec<K>> rels;
        std::vector<int> degs;
        if (g >= s) {
            rels.push_back(ModVec<K>::unit(0, one));
            degs.push_back(g);
        } else {
            for (int e = s; e < s + ring.max_weight(); ++e)
                for (const auto& m : ring.monomials_of_degree(e - g)) {
                    rels.push_back(ModVec<K>::from_terms({{0, m, one}}));
                    degs.push_back(e);
                }
        }
        out.push_back(minimize(ModulePresentation<K>(ring, G, columns_to_matrix(rels, G, degs), W)));
    }
    return out;
}

template <Coefficient K>
struct QuiverAlgebraSummary {
    std::vector<std::vector<std::size_t>> dims;  // dim Hom(E_i, E_j)
    // compositions[i][j][k][a][b] = coordinates of (basis b of Hom(E_j,E_k)) ∘ (basis a of Hom(E_i,E_j))
    std::vector<std::vector<std::vector<std::vector<std::vector<Vec<K>>>>>> compositions;
    std::size_t total_dimension = 0;
};

template <Coefficient K>
QuiverAlgebraSummary<K> q_algebra(const std::vector<MatrixFactorization<K>>& Es) {
    std::size_t n = Es.size();
    QuiverAlgebraSummary<K> q;
    std::vector<std::vector<std::unique_ptr<MorphismSpace<K>>>> sp(n);
    q.dims.assign(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            sp[i].push_back(std::make_unique<MorphismSpace<K>>(Es[i], Es[j]));
            q.dims[i][j] = sp[i][j]->dimension();
            q.total_dimension += q.dims[i][j];
        }
    q.compositions.assign(n, std::vector<std::vector<std::vector<std::vector<Vec<K>>>>>(n, std::vector<std::vector<std::vector<Vec<K>>>>(n)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                auto fs = sp[i][j]->basis();
                auto gs = sp[j][k]->basis();
                auto& cell = q.compositions[i][j][k];
                for (const auto& f : fs) {
                    std::vector<Vec<K>> row;
                    for (const auto& g : gs) row.push_back(sp[i][k]->class_of(compose(g, f)));
                    cell.push_back(std::move(row));
                }
            }
    return q;
}

struct TrichotomyReport {
    int a = 0;
    int num_vars = 0, degree = 0;
    std::string kind;       // fano, calabi-yau, general-type
    std::string statement;
    int predicted_length = 0;  // line bundles (a > 0) or exceptional objects (a < 0)
    std::optional<bool> verified;
    std::optional<int> verified_length;
};

template <Coefficient K>
TrichotomyReport trichotomy_report(const GradedRing& ring, const Polynomial<K>& W, bool verify = false, int lo = -6, int hi = 6) {
    TrichotomyReport r;
    r.a = gorenstein_parameter(ring, &W);
    r.num_vars = static_cast<int>(ring.num_vars());
    r.degree = *W.degree();
    if (r.a > 0) {
        r.kind = "fano";
        r.predicted_length = r.a;
        r.statement = "D^b(coh Y) = <O_Y(" + std::to_string(-r.a + 1) + "), ..., O_Y, DGrB(W)>: " + std::to_string(r.a) +
                      " line bundle object(s) and the matrix factorization category";
    } else if (r.a == 0) {
        r.kind = "calabi-yau";
        r.statement = "D^b(coh Y) is equivalent to DGrB(W)";
    } else {
        r.kind = "general-type";
        r.predicted_length = -r.a;
        r.statement = "DGrB(W) = <qk(" + std::to_string(r.a + 1) + "), ..., qk, D^b(coh Y)>: " + std::to_string(-r.a) +
                      " exceptional object(s) and the derived category of Y";
    }
    if (verify && r.a < 0) {
        std::vector<MatrixFactorization<K>> Es;
        auto k = residue_field<K>(ring, W);
        for (int q = 0; q >= r.a + 1; --q) Es.push_back(stabilize(k.twist(q)).mf);
        auto c = check_collection(Es, lo, hi, false);
        r.verified = c.is_exceptional_collection() && c.certified;
        r.verified_length = *r.verified ? static_cast<int>(Es.size()) : 0;
    }
    return r;
}

}  // namespace gmf
