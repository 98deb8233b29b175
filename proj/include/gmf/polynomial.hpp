#pragma once

#include "gmf/ring.hpp"

#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gmf {

template <Coefficient K>
struct Term {
    Monomial mono;
    K coeff;
};

/// Sparse polynomial, terms kept in strictly decreasing grevlex order with
/// no zero coefficients. The ring is not stored: monomials carry their own
/// weighted degree.
template <Coefficient K>
class Polynomial {
public:
    Polynomial() = default;

    static Polynomial constant(const K& c) { return monomial(Monomial{}, c); }

    static Polynomial monomial(const Monomial& m, const K& c) {
        Polynomial p;
        if (!c.is_zero()) p.terms_.push_back({m, c});
        return p;
    }

    /// Builds from arbitrary (unsorted, possibly repeated) terms.
    static Polynomial from_terms(std::vector<Term<K>> terms) {
        Polynomial p;
        p.terms_ = std::move(terms);
        p.normalize();
        return p;
    }

    const std::vector<Term<K>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Term<K>& leading() const { return terms_.front(); }

    /// Weighted degree if homogeneous (zero polynomial has no degree).
    std::optional<int> degree() const {
        if (terms_.empty() || !is_homogeneous()) return std::nullopt;
        return terms_.front().mono.deg;
    }
    bool is_homogeneous() const {
        for (const auto& t : terms_)
            if (t.mono.deg != terms_.front().mono.deg) return false;
        return true;
    }
    bool is_constant() const { return terms_.size() == 1 && terms_.front().mono.deg == 0; }

    /// Coefficient of the constant monomial (zero if absent).
    K constant_term() const {
        if (!terms_.empty() && terms_.back().mono.deg == 0) return terms_.back().coeff;
        return K{};
    }

    Polynomial operator+(const Polynomial& o) const { return merge(o, false); }
    Polynomial operator-(const Polynomial& o) const { return merge(o, true); }
    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

    Polynomial operator*(const K& c) const {
        if (c.is_zero()) return {};
        Polynomial r = *this;
        for (auto& t : r.terms_) t.coeff = t.coeff * c;
        return r;
    }

    Polynomial times_monomial(const Monomial& m, const K& c) const {
        if (c.is_zero()) return {};
        Polynomial r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
        return r;
    }

    Polynomial operator*(const Polynomial& o) const {
        if (is_zero() || o.is_zero()) return {};
        if (o.terms_.size() == 1) return times_monomial(o.terms_[0].mono, o.terms_[0].coeff);
        if (terms_.size() == 1) return o.times_monomial(terms_[0].mono, terms_[0].coeff);
        std::unordered_map<Monomial, K, MonomialHash> acc;
        acc.reserve(terms_.size() * o.terms_.size());
        for (const auto& a : terms_)
            for (const auto& b : o.terms_) {
                auto [it, fresh] = acc.try_emplace(a.mono * b.mono, a.coeff * b.coeff);
                if (!fresh) it->second += a.coeff * b.coeff;
            }
        Polynomial r;
        r.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!c.is_zero()) r.terms_.push_back({m, std::move(c)});
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const Term<K>& x, const Term<K>& y) { return grevlex_greater(x.mono, y.mono); });
        return r;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial pow(unsigned n, const Field& f) const {
        Polynomial r = constant(K::from_int(f, 1)), base = *this;
        while (n) {
            if (n & 1u) r *= base;
            n >>= 1u;
            if (n) base *= base;
        }
        return r;
    }

    /// Coefficient of a given monomial.
    K coefficient(const Monomial& m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term<K>& t, const Monomial& x) { return grevlex_greater(t.mono, x); });
        if (it != terms_.end() && it->mono == m) return it->coeff;
        return K{};
    }

    /// Partial derivative with respect to variable i.
    Polynomial derivative(std::size_t i, const Field& f, const GradedRing& ring) const {
        std::vector<Term<K>> out;
        for (const auto& t : terms_) {
            if (t.mono.exp[i] == 0) continue;
            Term<K> d{t.mono, t.coeff * K::from_int(f, t.mono.exp[i])};
            d.mono.exp[i] -= 1;
            d.mono.deg -= ring.weights()[i];
            if (!d.coeff.is_zero()) out.push_back(std::move(d));
        }
        return from_terms(std::move(out));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
        return true;
    }

private:
    void normalize() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term<K>& x, const Term<K>& y) { return grevlex_greater(x.mono, y.mono); });
        std::vector<Term<K>> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().mono == t.mono)
                out.back().coeff += t.coeff;
            else
                out.push_back(std::move(t));
            if (out.back().coeff.is_zero()) out.pop_back();
        }
        terms_ = std::move(out);
    }

    Polynomial merge(const Polynomial& o, bool subtract) const {
        Polynomial r;
        r.terms_.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() || j < o.terms_.size()) {
            if (j == o.terms_.size() || (i < terms_.size() && grevlex_greater(terms_[i].mono, o.terms_[j].mono))) {
                r.terms_.push_back(terms_[i++]);
            } else if (i == terms_.size() || grevlex_greater(o.terms_[j].mono, terms_[i].mono)) {
                r.terms_.push_back({o.terms_[j].mono, subtract ? -o.terms_[j].coeff : o.terms_[j].coeff});
                ++j;
            } else {
                K c = subtract ? terms_[i].coeff - o.terms_[j].coeff : terms_[i].coeff + o.terms_[j].coeff;
                if (!c.is_zero()) r.terms_.push_back({terms_[i].mono, std::move(c)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    std::vector<Term<K>> terms_;
};

}  // namespace gmf
