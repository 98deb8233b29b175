#pragma once

// Gröbner bases for homogeneous submodules of graded free modules over a
// weighted polynomial ring. Module order: position over term, lower position
// larger, graded reverse lex inside a position. Pairs are processed degree by
// degree (normal strategy), which also allows truncated bases.

#include "gmf/free_module.hpp"

#include <climits>
#include <map>
#include <set>

namespace gmf {

template <Coefficient K>
struct ModTerm {
    std::size_t pos;
    Monomial mono;
    K coeff;
};

inline bool pot_greater(std::size_t pa, const Monomial& ma, std::size_t pb, const Monomial& mb) {
    if (pa != pb) return pa < pb;
    return grevlex_greater(ma, mb);
}

/// Element of a free module: terms in strictly decreasing module order.
template <Coefficient K>
class ModVec {
public:
    ModVec() = default;

    static ModVec from_terms(std::vector<ModTerm<K>> terms) {
        std::sort(terms.begin(), terms.end(),
                  [](const ModTerm<K>& a, const ModTerm<K>& b) { return pot_greater(a.pos, a.mono, b.pos, b.mono); });
        ModVec v;
        for (auto& t : terms) {
            if (!v.t_.empty() && v.t_.back().pos == t.pos && v.t_.back().mono == t.mono)
                v.t_.back().coeff += t.coeff;
            else
                v.t_.push_back(std::move(t));
            if (v.t_.back().coeff.is_zero()) v.t_.pop_back();
        }
        return v;
    }

    /// Column j of m, as an element of m.target().
    static ModVec from_column(const GradedMatrix<K>& m, std::size_t j, std::size_t offset = 0) {
        ModVec v;
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (const auto& t : m(i, j).terms()) v.t_.push_back({i + offset, t.mono, t.coeff});
        return v;
    }

    static ModVec unit(std::size_t pos, const K& one) { return from_terms({{pos, Monomial{}, one}}); }

    const std::vector<ModTerm<K>>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    const ModTerm<K>& lead() const { return t_.front(); }

    /// Degree as an element of a module with the given generator degrees.
    int degree(const std::vector<int>& gens) const { return t_.front().mono.deg + gens[t_.front().pos]; }

    /// Polynomial in component pos.
    Polynomial<K> component(std::size_t pos) const {
        std::vector<Term<K>> ts;
        for (const auto& t : t_)
            if (t.pos == pos) ts.push_back({t.mono, t.coeff});
        return Polynomial<K>::from_terms(std::move(ts));
    }

    /// this + c * m * o.
    ModVec add_scaled(const ModVec& o, const Monomial& m, const K& c) const {
        ModVec r;
        r.t_.reserve(t_.size() + o.t_.size());
        std::size_t i = 0, j = 0;
        while (i < t_.size() || j < o.t_.size()) {
            if (j == o.t_.size()) {
                r.t_.push_back(t_[i++]);
                continue;
            }
            Monomial om = o.t_[j].mono * m;
            if (i == t_.size() || pot_greater(o.t_[j].pos, om, t_[i].pos, t_[i].mono)) {
                r.t_.push_back({o.t_[j].pos, om, o.t_[j].coeff * c});
                ++j;
            } else if (pot_greater(t_[i].pos, t_[i].mono, o.t_[j].pos, om)) {
                r.t_.push_back(t_[i++]);
            } else {
                K s = t_[i].coeff + o.t_[j].coeff * c;
                if (!s.is_zero()) r.t_.push_back({t_[i].pos, t_[i].mono, std::move(s)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    ModVec drop_lead() const {
        ModVec r;
        r.t_.assign(t_.begin() + 1, t_.end());
        return r;
    }

    ModVec scaled(const K& c) const {
        ModVec r = *this;
        for (auto& t : r.t_) t.coeff = t.coeff * c;
        return r;
    }

    /// Drops positions outside [lo, hi) and shifts the rest down by lo.
    ModVec restrict_positions(std::size_t lo, std::size_t hi) const {
        ModVec r;
        for (const auto& t : t_)
            if (t.pos >= lo && t.pos < hi) r.t_.push_back({t.pos - lo, t.mono, t.coeff});
        return r;
    }

    bool is_homogeneous(const std::vector<int>& gens) const {
        for (const auto& t : t_)
            if (t.mono.deg + gens[t.pos] != degree(gens)) return false;
        return true;
    }

    friend bool operator==(const ModVec& a, const ModVec& b) {
        if (a.t_.size() != b.t_.size()) return false;
        for (std::size_t k = 0; k < a.t_.size(); ++k)
            if (a.t_[k].pos != b.t_[k].pos || !(a.t_[k].mono == b.t_[k].mono) || !(a.t_[k].coeff == b.t_[k].coeff))
                return false;
        return true;
    }

private:
    std::vector<ModTerm<K>> t_;
};

/// Matrix whose columns are the given vectors (target = ambient, source degrees given).
template <Coefficient K>
GradedMatrix<K> columns_to_matrix(const std::vector<ModVec<K>>& cols, const GradedFreeModule& ambient,
                                  const std::vector<int>& col_degrees, int degree = 0) {
    GradedMatrix<K> m(GradedFreeModule(col_degrees), ambient, degree);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        std::vector<std::vector<Term<K>>> comps(ambient.rank());
        for (const auto& t : cols[j].terms()) comps[t.pos].push_back({t.mono, t.coeff});
        for (std::size_t i = 0; i < ambient.rank(); ++i) m(i, j) = Polynomial<K>::from_terms(std::move(comps[i]));
    }
    return m;
}

template <Coefficient K>
class GroebnerBasis {
public:
    GroebnerBasis(const GradedRing& ring, GradedFreeModule ambient)
        : ring_(&ring), ambient_(std::move(ambient)), by_pos_(ambient_.rank()) {}

    const GradedFreeModule& ambient() const { return ambient_; }
    const std::vector<ModVec<K>>& elements() const { return basis_; }
    void add_generator(const ModVec<K>& v) {
        if (v.is_zero()) return;
        if (!v.is_homogeneous(ambient_.degrees())) throw InputError("groebner: inhomogeneous generator");
        pending_gens_.emplace(v.degree(ambient_.degrees()), v);
    }

    /// Runs Buchberger's algorithm on everything of degree <= max_degree.
    void complete(int max_degree = INT_MAX) {
        for (;;) {
            int e = next_degree();
            if (e == INT_MAX || e > max_degree) break;
            std::vector<ModVec<K>> cands;
            auto [gb, ge] = pending_gens_.equal_range(e);
            for (auto it = gb; it != ge; ++it) cands.push_back(std::move(it->second));
            pending_gens_.erase(e);
            std::vector<Pair> now;
            for (auto it = pairs_.begin(); it != pairs_.end();) {
                if (it->degree == e) {
                    now.push_back(*it);
                    it = pairs_.erase(it);
                } else {
                    ++it;
                }
            }
            for (const Pair& pr : now) {
                pending_.erase({pr.i, pr.j});
                if (chain_criterion(pr)) continue;
                cands.push_back(spoly(pr));
            }
            for (auto& c : cands) {
                ModVec<K> r = reduce(c);
                if (!r.is_zero()) insert(std::move(r));
            }
        }
    }

    /// Full normal form against the current basis.
    ModVec<K> reduce(ModVec<K> v) const {
        std::vector<ModTerm<K>> rem;
        while (!v.is_zero()) {
            const ModTerm<K>& t = v.lead();
            const ModVec<K>* div = find_divisor(t.pos, t.mono);
            if (div) {
                Monomial q = div->lead().mono.quotient_of(t.mono);
                v = v.add_scaled(*div, q, -t.coeff);
            } else {
                rem.push_back(t);
                v = v.drop_lead();
            }
        }
        return ModVec<K>::from_terms(std::move(rem));
    }

    bool contains(const ModVec<K>& v) const { return reduce(v).is_zero(); }

    /// Adds an element that is already reduced with respect to the basis
    /// (used by minimal-generator selection at the current degree).
    void insert_reduced(const ModVec<K>& v) { insert(v); }

    /// Leading-term-minimal, tail-reduced copy of the basis.
    std::vector<ModVec<K>> reduced_basis() const {
        std::vector<ModVec<K>> keep;
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            bool redundant = false;
            for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
                if (i == j || basis_[j].lead().pos != basis_[i].lead().pos) continue;
                if (basis_[j].lead().mono.divides(basis_[i].lead().mono) &&
                    (!(basis_[j].lead().mono == basis_[i].lead().mono) || j < i))
                    redundant = true;
            }
            if (!redundant) keep.push_back(basis_[i]);
        }
        GroebnerBasis tmp(*ring_, ambient_);
        std::vector<ModVec<K>> out;
        for (std::size_t i = 0; i < keep.size(); ++i) {
            tmp.basis_.clear();
            for (auto& v : tmp.by_pos_) v.clear();
            for (std::size_t j = 0; j < keep.size(); ++j)
                if (j != i) tmp.push_raw(keep[j]);
            ModVec<K> tail = tmp.reduce(keep[i]);
            out.push_back(tail);
        }
        std::sort(out.begin(), out.end(), [](const ModVec<K>& a, const ModVec<K>& b) {
            return pot_greater(a.lead().pos, a.lead().mono, b.lead().pos, b.lead().mono);
        });
        return out;
    }

private:
    struct Pair {
        std::size_t i, j;
        int degree;
        std::size_t pos;
        Monomial lcm;
    };

    int next_degree() const {
        int e = INT_MAX;
        if (!pending_gens_.empty()) e = pending_gens_.begin()->first;
        for (const auto& p : pairs_) e = std::min(e, p.degree);
        return e;
    }

    const ModVec<K>* find_divisor(std::size_t pos, const Monomial& m) const {
        for (std::size_t k : by_pos_[pos])
            if (basis_[k].lead().mono.divides(m)) return &basis_[k];
        return nullptr;
    }

    void push_raw(const ModVec<K>& v) {
        by_pos_[v.lead().pos].push_back(basis_.size());
        basis_.push_back(v);
    }

    void insert(ModVec<K> v) {
        v = v.scaled(v.lead().coeff.inverse());
        std::size_t idx = basis_.size();
        std::size_t pos = v.lead().pos;
        for (std::size_t k : by_pos_[pos]) {
            Monomial l = ring_->lcm(basis_[k].lead().mono, v.lead().mono);
            Pair p{k, idx, l.deg + ambient_.degree(pos), pos, l};
            pairs_.push_back(p);
            pending_.insert({k, idx});
        }
        push_raw(v);
    }

    bool chain_criterion(const Pair& pr) const {
        for (std::size_t k : by_pos_[pr.pos]) {
            if (k == pr.i || k == pr.j) continue;
            if (!basis_[k].lead().mono.divides(pr.lcm)) continue;
            auto key = [](std::size_t a, std::size_t b) { return std::pair{std::min(a, b), std::max(a, b)}; };
            if (!pending_.count(key(pr.i, k)) && !pending_.count(key(pr.j, k))) return true;
        }
        return false;
    }

    ModVec<K> spoly(const Pair& pr) const {
        const auto& a = basis_[pr.i];
        const auto& b = basis_[pr.j];
        K one = a.lead().coeff;  // monic
        ModVec<K> s = ModVec<K>().add_scaled(a, a.lead().mono.quotient_of(pr.lcm), one);
        return s.add_scaled(b, b.lead().mono.quotient_of(pr.lcm), -one);
    }

    const GradedRing* ring_;
    GradedFreeModule ambient_;
    std::vector<ModVec<K>> basis_;
    std::vector<std::vector<std::size_t>> by_pos_;
    std::multimap<int, ModVec<K>> pending_gens_;
    std::vector<Pair> pairs_;
    std::set<std::pair<std::size_t, std::size_t>> pending_;
};

/// Buchberger-complete basis of the submodule generated by gens.
template <Coefficient K>
GroebnerBasis<K> groebner(const GradedRing& ring, const GradedFreeModule& ambient, const std::vector<ModVec<K>>& gens) {
    GroebnerBasis<K> gb(ring, ambient);
    for (const auto& g : gens) gb.add_generator(g);
    gb.complete();
    return gb;
}

template <Coefficient K>
ModVec<K> normal_form(const ModVec<K>& v, const GroebnerBasis<K>& gb) {
    for (const auto& t : v.terms())
        if (t.pos >= gb.ambient().rank()) throw InputError("normal_form: element does not live in the basis' ambient module");
    return gb.reduce(v);
}

/// Indices (into cands) of a minimal homogeneous generating set of
/// span(cands) modulo the submodule generated by seed. Candidates are taken
/// in increasing degree, ties by index; a candidate is kept iff it is not in
/// the span of the seed and the previously kept ones.
template <Coefficient K>
std::vector<std::size_t> minimal_generators(const GradedRing& ring, const GradedFreeModule& ambient,
                                            const std::vector<ModVec<K>>& cands,
                                            const std::vector<ModVec<K>>& seed = {}) {
    GroebnerBasis<K> gb(ring, ambient);
    for (const auto& s : seed) gb.add_generator(s);
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < cands.size(); ++i)
        if (!cands[i].is_zero()) order.push_back(i);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return cands[a].degree(ambient.degrees()) < cands[b].degree(ambient.degrees());
    });
    std::vector<std::size_t> chosen;
    for (std::size_t i : order) {
        int e = cands[i].degree(ambient.degrees());
        gb.complete(e);
        ModVec<K> r = gb.reduce(cands[i]);
        if (r.is_zero()) continue;
        chosen.push_back(i);
        gb.insert_reduced(r);
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

namespace detail {

template <Coefficient K>
void require_homogeneous(const GradedMatrix<K>& f, const char* who) {
    auto rep = validate_matrix(f);
    if (!rep.valid) {
        const auto& v = rep.violations.front();
        throw InputError(std::string(who) + ": inhomogeneous matrix entry at (" + std::to_string(v.row) + "," +
                         std::to_string(v.col) + "): " + v.reason);
    }
}

/// Ambient target ⊕ source(δ) with columns (f_j, e_j).
template <Coefficient K>
GroebnerBasis<K> graph_basis(const GradedMatrix<K>& f, const GradedRing& ring, int max_degree = INT_MAX) {
    std::vector<int> degs = f.target().degrees();
    for (int g : f.source().degrees()) degs.push_back(g + f.degree());
    GroebnerBasis<K> gb(ring, GradedFreeModule(degs));
    K one = K::from_int(ring.field(), 1);
    for (std::size_t j = 0; j < f.cols(); ++j) {
        ModVec<K> v = ModVec<K>::from_column(f, j).add_scaled(ModVec<K>::unit(f.rows() + j, one), Monomial{}, one);
        gb.add_generator(v);
    }
    gb.complete(max_degree);
    return gb;
}

}  // namespace detail

/// Kernel of f: the columns minimally generate ker f; the fresh source module
/// has the column degrees as generator degrees. f ∘ kernel(f) = 0.
template <Coefficient K>
GradedMatrix<K> kernel(const GradedMatrix<K>& f, const GradedRing& ring) {
    detail::require_homogeneous(f, "kernel");
    GroebnerBasis<K> gb = detail::graph_basis(f, ring);
    std::size_t r = f.rows();
    std::vector<ModVec<K>> ker;
    for (const auto& g : gb.elements())
        if (g.lead().pos >= r) ker.push_back(g.restrict_positions(r, r + f.cols()));
    auto keep = minimal_generators(ring, f.source(), ker);
    std::vector<ModVec<K>> cols;
    std::vector<int> degs;
    for (auto i : keep) {
        cols.push_back(ker[i]);
        degs.push_back(ker[i].degree(f.source().degrees()));
    }
    return columns_to_matrix(cols, f.source(), degs);
}

/// Result of a failed containment check.
class LiftError : public MathError {
public:
    LiftError(std::size_t column) : MathError("lift: column " + std::to_string(column) + " is not in the image"), column_(column) {}
    std::size_t witness_column() const { return column_; }

private:
    std::size_t column_;
};

/// h with through ∘ h = target_map; throws LiftError naming the first column
/// outside the image of `through`.
template <Coefficient K>
GradedMatrix<K> lift(const GradedMatrix<K>& target_map, const GradedMatrix<K>& through, const GradedRing& ring) {
    if (!(target_map.target() == through.target())) throw InputError("lift: maps have different targets");
    detail::require_homogeneous(target_map, "lift");
    detail::require_homogeneous(through, "lift");
    int maxdeg = INT_MIN;
    for (std::size_t k = 0; k < target_map.cols(); ++k)
        maxdeg = std::max(maxdeg, target_map.source().degree(k) + target_map.degree());
    GroebnerBasis<K> gb = detail::graph_basis(through, ring, maxdeg);
    std::size_t r = through.rows();
    GradedMatrix<K> h(target_map.source(), through.source(), target_map.degree() - through.degree());
    for (std::size_t k = 0; k < target_map.cols(); ++k) {
        ModVec<K> rem = gb.reduce(ModVec<K>::from_column(target_map, k));
        if (!rem.is_zero() && rem.lead().pos < r) throw LiftError(k);
        ModVec<K> u = rem.restrict_positions(r, r + through.cols());
        for (std::size_t i = 0; i < through.cols(); ++i) h(i, k) = -u.component(i);
    }
    return h;
}

/// Whether every column of m lies in the image of through.
template <Coefficient K>
bool image_contains(const GradedMatrix<K>& through, const GradedMatrix<K>& m, const GradedRing& ring) {
    try {
        lift(m, through, ring);
        return true;
    } catch (const LiftError&) {
        return false;
    }
}

}  // namespace gmf
