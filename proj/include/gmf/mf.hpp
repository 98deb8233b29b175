#pragma once

// Graded matrix factorizations of a potential W: objects, morphisms modulo
// homotopy, translation, twists, cones, Hom tables and isomorphism search.

#include "gmf/modules.hpp"
#include "gmf/parallel.hpp"
#include "gmf/random.hpp"

#include <climits>
#include <functional>

namespace gmf {

/// Shape of a homogeneous matrix source -> target(deg).
struct MatrixShape {
    GradedFreeModule source, target;
    int degree = 0;
};

/// Coordinates on a tuple of graded matrices: one per (slot, entry, monomial
/// of the forced entry degree).
template <Coefficient K>
class SlotSpace {
public:
    SlotSpace(const GradedRing& ring, std::vector<MatrixShape> shapes) : field_(ring.field()), shapes_(std::move(shapes)) {
        for (std::size_t s = 0; s < shapes_.size(); ++s) {
            const auto& sh = shapes_[s];
            for (std::size_t i = 0; i < sh.target.rank(); ++i)
                for (std::size_t j = 0; j < sh.source.rank(); ++j) {
                    int e = sh.source.degree(j) - sh.target.degree(i) + sh.degree;
                    for (const auto& m : ring.monomials_of_degree(e)) {
                        index_[{s, i, j, m.exp}] = coords_.size();
                        coords_.push_back({s, i, j, m});
                    }
                }
        }
    }

    std::size_t dim() const { return coords_.size(); }
    const std::vector<MatrixShape>& shapes() const { return shapes_; }

    std::vector<GradedMatrix<K>> zero() const {
        std::vector<GradedMatrix<K>> out;
        for (const auto& sh : shapes_) out.emplace_back(sh.source, sh.target, sh.degree);
        return out;
    }

    std::vector<GradedMatrix<K>> element(const Vec<K>& x) const {
        auto out = zero();
        for (std::size_t k = 0; k < coords_.size(); ++k) {
            if (x[k].is_zero()) continue;
            const auto& c = coords_[k];
            out[c.slot](c.i, c.j) += Polynomial<K>::monomial(c.mono, x[k]);
        }
        return out;
    }

    std::vector<GradedMatrix<K>> unit(std::size_t k) const {
        auto out = zero();
        const auto& c = coords_[k];
        out[c.slot](c.i, c.j) = Polynomial<K>::monomial(c.mono, K::from_int(field_, 1));
        return out;
    }

    Vec<K> coords(const std::vector<GradedMatrix<K>>& ms) const {
        Vec<K> out(dim());
        for (std::size_t s = 0; s < ms.size(); ++s)
            for (std::size_t i = 0; i < ms[s].rows(); ++i)
                for (std::size_t j = 0; j < ms[s].cols(); ++j)
                    for (const auto& t : ms[s](i, j).terms()) {
                        auto it = index_.find({s, i, j, t.mono.exp});
                        if (it == index_.end()) throw MathError("slot space: entry of unexpected degree");
                        out[it->second] = t.coeff;
                    }
        return out;
    }

private:
    struct Coord {
        std::size_t slot, i, j;
        Monomial mono;
    };
    Field field_;
    std::vector<MatrixShape> shapes_;
    std::vector<Coord> coords_;
    std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::array<std::uint16_t, kMaxVars>>, std::size_t> index_;
};

/// Matrix of a linear map between slot spaces, column k = image of unit k.
template <Coefficient K>
DenseMatrix<K> linear_map(const SlotSpace<K>& in, const SlotSpace<K>& out,
                          const std::function<std::vector<GradedMatrix<K>>(const std::vector<GradedMatrix<K>>&)>& fn) {
    DenseMatrix<K> m(out.dim(), in.dim());
    for (std::size_t k = 0; k < in.dim(); ++k) {
        auto v = out.coords(fn(in.unit(k)));
        for (std::size_t r = 0; r < v.size(); ++r) m(r, k) = v[r];
    }
    return m;
}

template <Coefficient K>
class MatrixFactorization {
public:
    MatrixFactorization(GradedRing ring, Polynomial<K> W, GradedMatrix<K> p1, GradedMatrix<K> p0)
        : ring_(std::move(ring)), W_(std::move(W)), p1_(std::move(p1)), p0_(std::move(p0)) {
        if (W_.is_zero() || !W_.is_homogeneous()) throw InputError("mf: potential must be nonzero and homogeneous");
        d_ = *W_.degree();
        if (p1_.degree() != 0) throw InputError("mf: p1 must have degree 0");
        if (p0_.degree() != d_) throw InputError("mf: p0 must have degree deg W");
        if (!(p0_.source() == p1_.target()) || !(p0_.target() == p1_.source()))
            throw InputError("mf: p1 and p0 must run between the same pair of free modules");
        if (p1_.source().rank() != p1_.target().rank()) throw InputError("mf: P1 and P0 must have equal rank");
    }

    static MatrixFactorization zero(const GradedRing& ring, const Polynomial<K>& W) {
        int d = W.degree().value_or(0);
        return MatrixFactorization(ring, W, GradedMatrix<K>({}, {}, 0), GradedMatrix<K>({}, {}, d));
    }

    const GradedRing& ring() const { return ring_; }
    const Polynomial<K>& potential() const { return W_; }
    int d() const { return d_; }
    const GradedMatrix<K>& p1() const { return p1_; }
    const GradedMatrix<K>& p0() const { return p0_; }
    const GradedFreeModule& P1() const { return p1_.source(); }
    const GradedFreeModule& P0() const { return p1_.target(); }
    std::size_t rank() const { return P1().rank(); }

    friend bool operator==(const MatrixFactorization& a, const MatrixFactorization& b) {
        return a.p1_ == b.p1_ && a.p0_ == b.p0_ && a.W_ == b.W_;
    }

private:
    GradedRing ring_;
    Polynomial<K> W_;
    int d_ = 0;
    GradedMatrix<K> p1_, p0_;
};

struct MFReport {
    bool valid = true;
    std::vector<std::string> failures;
};

template <Coefficient K>
MFReport mf_validate(const MatrixFactorization<K>& X) {
    MFReport rep;
    for (const auto* m : {&X.p1(), &X.p0()}) {
        auto mr = validate_matrix(*m);
        for (const auto& v : mr.violations)
            rep.failures.push_back(std::string(m == &X.p1() ? "p1" : "p0") + "(" + std::to_string(v.row) + "," +
                                   std::to_string(v.col) + "): " + v.reason + ", expected degree " +
                                   std::to_string(v.expected_degree));
    }
    auto check = [&](const GradedMatrix<K>& c, const char* name) {
        for (std::size_t i = 0; i < c.rows(); ++i)
            for (std::size_t j = 0; j < c.cols(); ++j) {
                auto want = i == j ? X.potential() : Polynomial<K>();
                if (!(c(i, j) == want))
                    rep.failures.push_back(std::string(name) + "(" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                                           to_string(c(i, j), X.ring()) + ", expected " + to_string(want, X.ring()));
            }
    };
    check(X.p0() * X.p1(), "p0*p1");
    check(X.p1() * X.p0(), "p1*p0");
    rep.valid = rep.failures.empty();
    return rep;
}

/// X(q): generator degrees lowered by q, matrices unchanged.
template <Coefficient K>
MatrixFactorization<K> mf_twist(const MatrixFactorization<K>& X, int q) {
    return MatrixFactorization<K>(X.ring(), X.potential(), twist(X.p1(), q), twist(X.p0(), q));
}

/// X[1] = (P0, P1(d); -p0, -p1).
template <Coefficient K>
MatrixFactorization<K> mf_shift(const MatrixFactorization<K>& X) {
    auto P1n = X.P0();
    auto P0n = X.P1().twist(X.d());
    return MatrixFactorization<K>(X.ring(), X.potential(), -X.p0().reinterpret(P1n, P0n, 0),
                                  -X.p1().reinterpret(P0n, P1n, X.d()));
}

/// X[p]; even shifts are twists by (p/2)·d.
template <Coefficient K>
MatrixFactorization<K> mf_translate(const MatrixFactorization<K>& X, int p) {
    int m = p >= 0 ? p / 2 : -((-p + 1) / 2);
    int r = p - 2 * m;
    return mf_twist(r ? mf_shift(X) : X, m * X.d());
}

template <Coefficient K>
MatrixFactorization<K> mf_direct_sum(const MatrixFactorization<K>& X, const MatrixFactorization<K>& Y) {
    if (!(X.potential() == Y.potential())) throw InputError("mf_direct_sum: different potentials");
    return MatrixFactorization<K>(X.ring(), X.potential(), direct_sum(X.p1(), Y.p1()), direct_sum(X.p0(), Y.p0()));
}

template <Coefficient K>
struct MFMorphism {
    std::shared_ptr<const MatrixFactorization<K>> source, target;
    GradedMatrix<K> f1, f0;
};

template <Coefficient K>
struct Homotopy {
    GradedMatrix<K> s, t;
};

template <Coefficient K>
MFMorphism<K> make_morphism(const MatrixFactorization<K>& X, const MatrixFactorization<K>& Y, GradedMatrix<K> f1,
                            GradedMatrix<K> f0) {
    return {std::make_shared<const MatrixFactorization<K>>(X), std::make_shared<const MatrixFactorization<K>>(Y),
            std::move(f1), std::move(f0)};
}

template <Coefficient K>
MFMorphism<K> identity_morphism(const MatrixFactorization<K>& X) {
    return make_morphism(X, X, GradedMatrix<K>::identity(X.P1(), X.ring().field()),
                         GradedMatrix<K>::identity(X.P0(), X.ring().field()));
}

template <Coefficient K>
MFMorphism<K> zero_morphism(const MatrixFactorization<K>& X, const MatrixFactorization<K>& Y) {
    return make_morphism(X, Y, GradedMatrix<K>(X.P1(), Y.P1(), 0), GradedMatrix<K>(X.P0(), Y.P0(), 0));
}

/// q1 f1 = f0 p1 and f1 p0 = q0 f0, with correct bookkeeping.
template <Coefficient K>
bool is_morphism(const MFMorphism<K>& f) {
    const auto& X = *f.source;
    const auto& Y = *f.target;
    if (!(f.f1.source() == X.P1()) || !(f.f1.target() == Y.P1()) || !(f.f0.source() == X.P0()) ||
        !(f.f0.target() == Y.P0()) || f.f1.degree() != 0 || f.f0.degree() != 0)
        return false;
    if (!validate_matrix(f.f1).valid || !validate_matrix(f.f0).valid) return false;
    return Y.p1() * f.f1 == f.f0 * X.p1() && f.f1 * X.p0() == Y.p0() * f.f0;
}

/// g ∘ f.
template <Coefficient K>
MFMorphism<K> compose(const MFMorphism<K>& g, const MFMorphism<K>& f) {
    if (!(*g.source == *f.target)) throw InputError("compose: morphisms are not composable");
    return {f.source, g.target, g.f1 * f.f1, g.f0 * f.f0};
}

template <Coefficient K>
MFMorphism<K> operator-(const MFMorphism<K>& a, const MFMorphism<K>& b) {
    return {a.source, a.target, a.f1 - b.f1, a.f0 - b.f0};
}

template <Coefficient K>
struct Cone {
    MatrixFactorization<K> object;
    MFMorphism<K> g;  // Y -> C(f)
    MFMorphism<K> h;  // C(f) -> X[1]
};

/// C(f) = (Q1 ⊕ P0, Q0 ⊕ P1(d); [[q1, f0], [0, -p0]], [[q0, f1], [0, -p1]]).
template <Coefficient K>
Cone<K> mf_cone(const MFMorphism<K>& f) {
    if (!is_morphism(f)) throw InputError("mf_cone: not a morphism of matrix factorizations");
    const auto& X = *f.source;
    const auto& Y = *f.target;
    int d = X.d();
    auto P1d = X.P1().twist(d);
    auto C1 = Y.P1().direct_sum(X.P0());
    auto C0 = Y.P0().direct_sum(P1d);
    auto c1 = block_matrix(Y.p1(), f.f0, GradedMatrix<K>(Y.P1(), P1d, 0), -X.p0().reinterpret(X.P0(), P1d, 0));
    auto c0 = block_matrix(Y.p0(), f.f1.reinterpret(P1d, Y.P1(), d), GradedMatrix<K>(Y.P0(), X.P0(), d),
                           -X.p1().reinterpret(P1d, X.P0(), d));
    MatrixFactorization<K> C(X.ring(), X.potential(), c1, c0);
    auto XS = mf_shift(X);
    const Field& F = X.ring().field();
    auto inc = [&](const GradedFreeModule& a, const GradedFreeModule& b) {
        GradedMatrix<K> m(a, a.direct_sum(b), 0);
        for (std::size_t i = 0; i < a.rank(); ++i) m(i, i) = Polynomial<K>::constant(K::from_int(F, 1));
        return m;
    };
    auto proj = [&](const GradedFreeModule& a, const GradedFreeModule& b) {
        GradedMatrix<K> m(a.direct_sum(b), b, 0);
        for (std::size_t i = 0; i < b.rank(); ++i) m(i, a.rank() + i) = Polynomial<K>::constant(K::from_int(F, -1));
        return m;
    };
    auto g = make_morphism(Y, C, inc(Y.P1(), X.P0()), inc(Y.P0(), P1d));
    auto h = make_morphism(C, XS, proj(Y.P1(), X.P0()), proj(Y.P0(), P1d));
    return {C, g, h};
}

/// Degree-0 morphisms X -> Y modulo null-homotopic ones, as linear algebra
/// over the coefficient spaces of the entries.
template <Coefficient K>
class MorphismSpace {
public:
    MorphismSpace(const MatrixFactorization<K>& X, const MatrixFactorization<K>& Y)
        : X_(std::make_shared<const MatrixFactorization<K>>(X)),
          Y_(std::make_shared<const MatrixFactorization<K>>(Y)),
          maps_(X.ring(), {{X.P1(), Y.P1(), 0}, {X.P0(), Y.P0(), 0}}),
          homs_(X.ring(), {{X.P0(), Y.P1(), 0}, {X.P1(), Y.P0(), -X.d()}}),
          span_(maps_.dim()) {
        if (!(X.potential() == Y.potential())) throw InputError("morphism space: different potentials");
        SlotSpace<K> constraints(X.ring(), {{X.P1(), Y.P0(), 0}, {X.P0(), Y.P1(), X.d()}});
        auto C = linear_map<K>(maps_, constraints, [&](const auto& f) {
            return std::vector<GradedMatrix<K>>{Y.p1() * f[0] - f[1] * X.p1(), f[0] * X.p0() - Y.p0() * f[1]};
        });
        hmap_ = linear_map<K>(homs_, maps_, [&](const auto& h) {
            return std::vector<GradedMatrix<K>>{Y.p0() * h[1] + h[0] * X.p1(), h[1] * X.p0() + Y.p1() * h[0]};
        });
        for (std::size_t k = 0; k < hmap_.cols(); ++k) {
            Vec<K> col(hmap_.rows());
            for (std::size_t r = 0; r < hmap_.rows(); ++r) col[r] = hmap_(r, k);
            span_.insert(col);
        }
        boundaries_ = span_.dim();
        cycles_ = nullspace(C, X.ring().field());
        for (const auto& z : cycles_)
            if (span_.insert(z)) basis_.push_back(z);
    }

    const MatrixFactorization<K>& source() const { return *X_; }
    const MatrixFactorization<K>& target() const { return *Y_; }
    std::size_t dimension() const { return basis_.size(); }
    std::size_t cycle_dimension() const { return cycles_.size(); }
    std::size_t boundary_dimension() const { return boundaries_; }

    MFMorphism<K> morphism(const Vec<K>& coords) const {
        auto m = maps_.element(coords);
        return {X_, Y_, m[0], m[1]};
    }

    std::vector<MFMorphism<K>> basis() const {
        std::vector<MFMorphism<K>> out;
        for (const auto& b : basis_) out.push_back(morphism(b));
        return out;
    }

    const std::vector<Vec<K>>& basis_coords() const { return basis_; }

    Vec<K> coords(const MFMorphism<K>& f) const { return maps_.coords({f.f1, f.f0}); }

    std::optional<Homotopy<K>> homotopy(const MFMorphism<K>& f) const {
        auto x = solve(hmap_, coords(f));
        if (!x) return std::nullopt;
        auto h = homs_.element(*x);
        return Homotopy<K>{h[0], h[1]};
    }

    bool is_null_homotopic(const MFMorphism<K>& f) const { return homotopy(f).has_value(); }

    /// Coordinates of the homotopy class of f on basis().
    Vec<K> class_of(const MFMorphism<K>& f) const {
        DenseMatrix<K> m(maps_.dim(), hmap_.cols() + basis_.size());
        for (std::size_t r = 0; r < maps_.dim(); ++r) {
            for (std::size_t c = 0; c < hmap_.cols(); ++c) m(r, c) = hmap_(r, c);
            for (std::size_t b = 0; b < basis_.size(); ++b) m(r, hmap_.cols() + b) = basis_[b][r];
        }
        auto x = solve(m, coords(f));
        if (!x) throw MathError("class_of: not a morphism of matrix factorizations");
        return Vec<K>(x->begin() + static_cast<long>(hmap_.cols()), x->end());
    }

    const DenseMatrix<K>& homotopy_matrix() const { return hmap_; }
    const SlotSpace<K>& map_space() const { return maps_; }

private:
    std::shared_ptr<const MatrixFactorization<K>> X_, Y_;
    SlotSpace<K> maps_, homs_;
    DenseMatrix<K> hmap_;
    Span<K> span_;
    std::size_t boundaries_ = 0;
    std::vector<Vec<K>> cycles_, basis_;
};

/// s, t witness f ~ 0: f1 = q0 t + s p1 and f0 = t p0 + q1 s.
template <Coefficient K>
bool is_homotopy(const MFMorphism<K>& f, const Homotopy<K>& h) {
    const auto& X = *f.source;
    const auto& Y = *f.target;
    return f.f1 == Y.p0() * h.t + h.s * X.p1() && f.f0 == h.t * X.p0() + Y.p1() * h.s;
}

/// Hom(X, Y[p](q)) in the homotopy category.
template <Coefficient K>
HomSpace<MFMorphism<K>> mf_hom(const MatrixFactorization<K>& X, const MatrixFactorization<K>& Y, int p = 0, int q = 0) {
    MorphismSpace<K> sp(X, mf_twist(mf_translate(Y, p), q));
    HomSpace<MFMorphism<K>> out;
    out.basis = sp.basis();
    out.certification = Certification::structural;
    return out;
}

template <Coefficient K>
std::size_t mf_hom_dimension(const MatrixFactorization<K>& X, const MatrixFactorization<K>& Y, int p = 0, int q = 0) {
    return MorphismSpace<K>(X, mf_twist(mf_translate(Y, p), q)).dimension();
}

namespace detail {

/// Least D with B_{>=D} inside the Jacobian ideal, if the ideal is m-primary.
template <Coefficient K>
std::optional<int> jacobian_saturation(const GradedRing& ring, const Polynomial<K>& W) {
    std::vector<ModVec<K>> gens;
    for (std::size_t i = 0; i < ring.num_vars(); ++i) {
        auto p = W.derivative(i, ring.field(), ring);
        if (p.is_zero()) continue;
        std::vector<ModTerm<K>> ts;
        for (const auto& t : p.terms()) ts.push_back({0, t.mono, t.coeff});
        gens.push_back(ModVec<K>::from_terms(std::move(ts)));
    }
    QuotientModule<K> Q(ring, GradedFreeModule({0}), gens);
    int d = *W.degree();
    int top = 0;
    for (int w : ring.weights()) top += std::max(0, d - 2 * w);
    int run = 0;
    for (int e = 0; e <= top + 2 * ring.max_weight() + 1; ++e) {
        if (Q.dim(e) == 0) {
            if (++run == ring.max_weight()) return e - run + 1;
        } else {
            run = 0;
        }
    }
    return std::nullopt;
}

/// Generator degrees of the graded module of closed maps X -> Y (all degrees).
template <Coefficient K>
std::vector<int> cycle_generator_degrees(const MatrixFactorization<K>& X, const MatrixFactorization<K>& Y) {
    const auto &P1 = X.P1(), &P0 = X.P0(), &Q1 = Y.P1(), &Q0 = Y.P0();
    std::size_t r = P1.rank(), s = Q1.rank();
    int d = X.d();
    std::vector<int> src, tgt;
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < r; ++j) src.push_back(Q1.degree(i) - P1.degree(j));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < r; ++j) src.push_back(Q0.degree(i) - P0.degree(j));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < r; ++j) tgt.push_back(Q0.degree(i) - P1.degree(j));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < r; ++j) tgt.push_back(Q1.degree(i) - P0.degree(j) - d);
    GradedMatrix<K> phi(GradedFreeModule(src), GradedFreeModule(tgt), 0);
    std::size_t off = s * r;
    auto E = [&](std::size_t i, std::size_t j) { return i * r + j; };
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            // f1 = E_ij: q1 f1 and f1 p0
            for (std::size_t k = 0; k < s; ++k) phi(E(k, j), E(i, j)) += Y.p1()(k, i);
            for (std::size_t l = 0; l < r; ++l) phi(off + E(i, l), E(i, j)) += X.p0()(j, l);
            // f0 = E_ij: -f0 p1 and -q0 f0
            for (std::size_t l = 0; l < r; ++l) phi(E(i, l), off + E(i, j)) -= X.p1()(j, l);
            for (std::size_t k = 0; k < s; ++k) phi(off + E(k, j), off + E(i, j)) -= Y.p0()(k, i);
        }
    return kernel(phi, X.ring()).source().degrees();
}

}  // namespace detail

/// Twist range outside which Hom(X, Y(q)) vanishes: zero for q < lo, and for
/// q >= hi when hi is known.
struct TwistVanishing {
    int lo = INT_MAX;
    std::optional<int> hi;
    bool everywhere = false;
};

template <Coefficient K>
TwistVanishing twist_vanishing(const MatrixFactorization<K>& X, const MatrixFactorization<K>& Y) {
    TwistVanishing v;
    auto degs = detail::cycle_generator_degrees(X, Y);
    if (degs.empty()) {
        v.everywhere = true;
        v.hi = INT_MIN;
        return v;
    }
    v.lo = *std::min_element(degs.begin(), degs.end());
    if (auto D = detail::jacobian_saturation(X.ring(), X.potential()))
        v.hi = *std::max_element(degs.begin(), degs.end()) + *D;
    return v;
}

struct HomTable {
    int lo = 0, hi = 0;
    std::vector<std::size_t> dims;  // dims[p - lo]
    bool certified = false;         // vanishing proved for every p outside [lo, hi]
    std::string note;

    std::size_t at(int p) const { return dims[static_cast<std::size_t>(p - lo)]; }
};

/// dim Hom(X, Y[p]) for p in [lo, hi].
template <Coefficient K>
HomTable mf_hom_table(const MatrixFactorization<K>& X, const MatrixFactorization<K>& Y, int lo, int hi, bool certify,
                      unsigned threads = 1) {
    if (hi < lo) throw InputError("mf_hom_table: empty shift range");
    HomTable t;
    t.lo = lo;
    t.hi = hi;
    t.dims = parallel_map(static_cast<std::size_t>(hi - lo + 1), threads,
                          [&](std::size_t k) { return mf_hom_dimension(X, Y, lo + static_cast<int>(k)); });
    if (!certify) return t;
    if (X.rank() == 0 || Y.rank() == 0) {
        t.certified = true;
        t.note = "zero object";
        return t;
    }
    int d = X.d();
    bool ok = true;
    std::vector<std::string> notes;
    for (int r = 0; r < 2; ++r) {
        auto v = twist_vanishing(X, r ? mf_shift(Y) : Y);
        if (v.everywhere) continue;
        // p = 2m + r; Hom(X, Y[p]) = Hom(X, Y[r](m d))
        for (int p = lo - 2; p < lo; ++p) {
            if (((p % 2) + 2) % 2 != r) continue;
            int m = (p - r) / 2;
            if (m * d >= v.lo) ok = false;
        }
        if (!v.hi) {
            ok = false;
            notes.push_back("Jacobian ideal is not primary to the maximal ideal");
            continue;
        }
        for (int p = hi + 1; p <= hi + 2; ++p) {
            if (((p % 2) + 2) % 2 != r) continue;
            int m = (p - r) / 2;
            if (m * d < *v.hi) ok = false;
        }
    }
    t.certified = ok;
    if (!ok && notes.empty()) notes.push_back("vanishing bounds lie outside the shift range");
    for (auto& n : notes) t.note += (t.note.empty() ? "" : "; ") + n;
    return t;
}

/// Repeatedly split off contractible summands (1, W) by pivoting on unit
/// entries of p1 or p0.
template <Coefficient K>
MatrixFactorization<K> mf_minimize(const MatrixFactorization<K>& X) {
    auto p1 = X.p1();
    auto p0 = X.p0();
    auto split = [](GradedMatrix<K>& A, GradedMatrix<K>& B, std::size_t i, std::size_t j) {
        K inv = A(i, j).constant_term().inverse();
        for (std::size_t k = 0; k < A.rows(); ++k) {
            if (k == i || A(k, j).is_zero()) continue;
            Polynomial<K> lam = A(k, j) * inv;
            for (std::size_t c = 0; c < A.cols(); ++c)
                if (!A(i, c).is_zero()) A(k, c) -= lam * A(i, c);
            for (std::size_t r = 0; r < B.rows(); ++r)
                if (!B(r, k).is_zero()) B(r, i) += B(r, k) * lam;
        }
        for (std::size_t l = 0; l < A.cols(); ++l) {
            if (l == j || A(i, l).is_zero()) continue;
            Polynomial<K> mu = A(i, l) * inv;
            for (std::size_t r = 0; r < A.rows(); ++r)
                if (!A(r, j).is_zero()) A(r, l) -= A(r, j) * mu;
            for (std::size_t c = 0; c < B.cols(); ++c)
                if (!B(l, c).is_zero()) B(j, c) += mu * B(l, c);
        }
        auto others = [](std::size_t n, std::size_t skip) {
            std::vector<std::size_t> v;
            for (std::size_t k = 0; k < n; ++k)
                if (k != skip) v.push_back(k);
            return v;
        };
        A = A.select(others(A.rows(), i), others(A.cols(), j));
        B = B.select(others(B.rows(), j), others(B.cols(), i));
    };
    for (;;) {
        if (auto u = detail::first_unit(p1)) {
            split(p1, p0, u->first, u->second);
        } else if (auto u0 = detail::first_unit(p0)) {
            split(p0, p1, u0->first, u0->second);
        } else {
            break;
        }
    }
    return MatrixFactorization<K>(X.ring(), X.potential(), p1, p0);
}

/// Hilbert function of Coker(p1) over A.
template <Coefficient K>
std::vector<std::size_t> cokernel_hilbert(const MatrixFactorization<K>& X, int lo, int hi) {
    ModulePresentation<K> M(X.ring(), X.P0(), X.p1(), X.potential());
    return hilbert_function(M, lo, hi);
}

template <Coefficient K>
struct IsoResult {
    std::optional<std::pair<MFMorphism<K>, MFMorphism<K>>> witness;  // φ: X -> Y, ψ: Y -> X
    std::uint64_t seed = 0;
    int attempts = 0;
    std::vector<std::string> discriminators;
    bool found() const { return witness.has_value(); }
};

/// Witness search for X ≅ Y in the homotopy category: a seeded random φ in
/// Hom(X, Y), then a linear solve for ψ with ψφ ~ id and φψ ~ id.
template <Coefficient K>
IsoResult<K> mf_is_isomorphic(const MatrixFactorization<K>& X, const MatrixFactorization<K>& Y, std::uint64_t seed = 1,
                              int attempts = 4) {
    IsoResult<K> res;
    res.seed = seed;
    MorphismSpace<K> XY(X, Y), YX(Y, X), EX(X, X), EY(Y, Y);
    const Field& F = X.ring().field();
    auto disc = [&]() {
        std::vector<std::string> out;
        auto num = [](std::size_t v) { return std::to_string(v); };
        if (EX.dimension() != EY.dimension())
            out.push_back("dim End differ: " + num(EX.dimension()) + " vs " + num(EY.dimension()));
        if (XY.dimension() != EX.dimension() || YX.dimension() != EX.dimension())
            out.push_back("Hom dimensions: End(X)=" + num(EX.dimension()) + ", Hom(X,Y)=" + num(XY.dimension()) +
                          ", Hom(Y,X)=" + num(YX.dimension()) + ", End(Y)=" + num(EY.dimension()));
        int lo = INT_MAX;
        for (const auto* M : {&X, &Y})
            for (int g : M->P0().degrees()) lo = std::min(lo, g);
        if (lo == INT_MAX) lo = 0;
        auto hx = cokernel_hilbert(X, lo, lo + 2 * X.d() + 2);
        auto hy = cokernel_hilbert(Y, lo, lo + 2 * X.d() + 2);
        if (hx != hy) {
            auto str = [](const std::vector<std::size_t>& v) {
                std::string s;
                for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
                return s;
            };
            out.push_back("cokernel Hilbert functions differ from degree " + std::to_string(lo) + ": [" + str(hx) +
                          "] vs [" + str(hy) + "]");
        }
        return out;
    };
    if (XY.dimension() != YX.dimension() || EX.dimension() != EY.dimension() || XY.dimension() != EX.dimension()) {
        res.discriminators = disc();
        return res;
    }
    auto psis = YX.basis();
    auto phis = XY.basis();
    auto idx = EX.coords(identity_morphism(X));
    auto idy = EY.coords(identity_morphism(Y));
    Rng rng(seed);
    for (int a = 0; a < attempts; ++a) {
        ++res.attempts;
        MFMorphism<K> phi = zero_morphism(X, Y);
        for (const auto& b : phis) {
            K c = generic_coefficient<K>(F, rng);
            phi.f1 = phi.f1 + b.f1 * c;
            phi.f0 = phi.f0 + b.f0 * c;
        }
        std::size_t nx = EX.map_space().dim(), ny = EY.map_space().dim();
        std::size_t hx = EX.homotopy_matrix().cols(), hy = EY.homotopy_matrix().cols();
        std::size_t np = psis.size();
        DenseMatrix<K> m(nx + ny, np + hx + hy);
        Vec<K> rhs(nx + ny);
        for (std::size_t k = 0; k < np; ++k) {
            auto u = EX.coords(compose(psis[k], phi));
            auto v = EY.coords(compose(phi, psis[k]));
            for (std::size_t r = 0; r < nx; ++r) m(r, k) = u[r];
            for (std::size_t r = 0; r < ny; ++r) m(nx + r, k) = v[r];
        }
        for (std::size_t c = 0; c < hx; ++c)
            for (std::size_t r = 0; r < nx; ++r) m(r, np + c) = -EX.homotopy_matrix()(r, c);
        for (std::size_t c = 0; c < hy; ++c)
            for (std::size_t r = 0; r < ny; ++r) m(nx + r, np + hx + c) = -EY.homotopy_matrix()(r, c);
        for (std::size_t r = 0; r < nx; ++r) rhs[r] = idx[r];
        for (std::size_t r = 0; r < ny; ++r) rhs[nx + r] = idy[r];
        auto x = solve(m, rhs);
        if (!x) continue;
        MFMorphism<K> psi = zero_morphism(Y, X);
        for (std::size_t k = 0; k < np; ++k) {
            if ((*x)[k].is_zero()) continue;
            psi.f1 = psi.f1 + psis[k].f1 * (*x)[k];
            psi.f0 = psi.f0 + psis[k].f0 * (*x)[k];
        }
        if (EX.is_null_homotopic(compose(psi, phi) - identity_morphism(X)) &&
            EY.is_null_homotopic(compose(phi, psi) - identity_morphism(Y))) {
            res.witness = std::pair{phi, psi};
            return res;
        }
    }
    res.discriminators = disc();
    if (res.discriminators.empty()) res.discriminators.push_back("no witness found; no discriminating invariant");
    return res;
}

/// id_X ~ 0.
template <Coefficient K>
bool is_contractible(const MatrixFactorization<K>& X) {
    return MorphismSpace<K>(X, X).is_null_homotopic(identity_morphism(X));
}

}  // namespace gmf
