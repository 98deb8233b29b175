#pragma once

#include "gmf/field.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

namespace gmf {

inline constexpr std::size_t kMaxVars = 8;

/// Exponent vector together with its weighted degree. Ordered by graded
/// reverse lexicographic order: higher degree first, then the monomial with
/// the smaller exponent in the last differing variable is larger.
struct Monomial {
    std::array<std::uint16_t, kMaxVars> exp{};
    int deg = 0;

    bool is_one() const { return deg == 0 && std::all_of(exp.begin(), exp.end(), [](auto e) { return e == 0; }); }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint16_t>(a.exp[i] + b.exp[i]);
        r.deg = a.deg + b.deg;
        return r;
    }

    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < kMaxVars; ++i)
            if (exp[i] > m.exp[i]) return false;
        return true;
    }

    /// m / *this, assuming divides(m).
    Monomial quotient_of(const Monomial& m) const {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint16_t>(m.exp[i] - exp[i]);
        r.deg = m.deg - deg;
        return r;
    }
};

/// Strict "greater than" in graded reverse lex.
inline bool grevlex_greater(const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg > b.deg;
    for (std::size_t i = kMaxVars; i-- > 0;)
        if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i];
    return false;
}

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto e : m.exp) h = (h ^ e) * 1099511628211ull;
        return h;
    }
};

/// Weighted polynomial ring k[x_1..x_N] with deg x_i = a_i > 0.
class GradedRing {
public:
    GradedRing(std::vector<std::string> names, std::vector<int> weights, Field field)
        : names_(std::move(names)), weights_(std::move(weights)), field_(field) {
        if (names_.size() != weights_.size()) throw InputError("ring: variable and weight lists differ in length");
        if (names_.empty()) throw InputError("ring: at least one variable is required");
        if (names_.size() > kMaxVars) throw InputError("ring: at most " + std::to_string(kMaxVars) + " variables supported");
        std::unordered_set<std::string> seen;
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (weights_[i] <= 0) throw InputError("ring: weights must be positive (variable " + names_[i] + ")");
            if (!seen.insert(names_[i]).second) throw InputError("ring: duplicate variable name " + names_[i]);
        }
    }

    /// Standard-graded ring in the given variables.
    static GradedRing standard(std::vector<std::string> names, Field field) {
        std::vector<int> w(names.size(), 1);
        return GradedRing(std::move(names), std::move(w), field);
    }

    std::size_t num_vars() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<int>& weights() const { return weights_; }
    const Field& field() const { return field_; }
    int max_weight() const { return *std::max_element(weights_.begin(), weights_.end()); }
    int weight_sum() const { return std::accumulate(weights_.begin(), weights_.end(), 0); }

    int index_of(const std::string& name) const {
        auto it = std::find(names_.begin(), names_.end(), name);
        return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
    }

    Monomial variable(std::size_t i, int power = 1) const {
        Monomial m;
        m.exp[i] = static_cast<std::uint16_t>(power);
        m.deg = weights_[i] * power;
        return m;
    }

    int degree_of(const Monomial& m) const {
        int d = 0;
        for (std::size_t i = 0; i < num_vars(); ++i) d += weights_[i] * m.exp[i];
        return d;
    }

    Monomial lcm(const Monomial& a, const Monomial& b) const {
        Monomial r;
        for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = std::max(a.exp[i], b.exp[i]);
        r.deg = degree_of(r);
        return r;
    }

    /// All monomials of weighted degree e, in decreasing grevlex order.
    std::vector<Monomial> monomials_of_degree(int e) const {
        std::vector<Monomial> out;
        if (e < 0) return out;
        Monomial cur;
        std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
            if (i + 1 == num_vars()) {
                if (left % weights_[i] == 0) {
                    cur.exp[i] = static_cast<std::uint16_t>(left / weights_[i]);
                    cur.deg = e;
                    out.push_back(cur);
                    cur.exp[i] = 0;
                }
                return;
            }
            for (int k = 0; k * weights_[i] <= left; ++k) {
                cur.exp[i] = static_cast<std::uint16_t>(k);
                rec(i + 1, left - k * weights_[i]);
            }
            cur.exp[i] = 0;
        };
        rec(0, e);
        std::sort(out.begin(), out.end(), grevlex_greater);
        return out;
    }

    friend bool operator==(const GradedRing&, const GradedRing&) = default;

private:
    std::vector<std::string> names_;
    std::vector<int> weights_;
    Field field_;
};

}  // namespace gmf
