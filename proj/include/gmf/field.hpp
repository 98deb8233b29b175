#pragma once

// Exact coefficient fields: the rationals (GMP-backed, always reduced) and
// prime fields Z/p with p < 2^31.

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace gmf {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (parse errors, unknown names, bad shapes).
class InputError : public Error {
public:
    using Error::Error;
};

/// A mathematical precondition failed (e.g. a lift does not exist).
class MathError : public Error {
public:
    using Error::Error;
};

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Runtime descriptor of the base field.
struct Field {
    enum class Kind { rationals, prime };

    Kind kind = Kind::rationals;
    std::uint32_t p = 0;

    static Field rationals() { return {}; }

    static Field prime_field(std::uint64_t p) {
        if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
            throw InputError("field characteristic must be a prime below 2^31, got " + std::to_string(p));
        return {Kind::prime, static_cast<std::uint32_t>(p)};
    }

    bool is_prime_field() const { return kind == Kind::prime; }

    std::string name() const { return is_prime_field() ? "GF(" + std::to_string(p) + ")" : "QQ"; }

    friend bool operator==(const Field&, const Field&) = default;
};

/// Element of Z/p. The modulus travels with the value; a default-constructed
/// element is the zero of every prime field (modulus 0 until combined).
class Zp {
public:
    Zp() = default;

    static Zp from_int(const Field& f, long long n) {
        long long p = f.p;
        long long r = n % p;
        if (r < 0) r += p;
        return Zp(static_cast<std::uint32_t>(r), f.p);
    }

    static Zp from_fraction(const Field& f, const mpz_class& num, const mpz_class& den) {
        mpz_class p = f.p;
        mpz_class d = den % p;
        if (d < 0) d += p;
        if (d == 0) throw InputError("coefficient denominator vanishes in " + f.name());
        mpz_class n = num % p;
        if (n < 0) n += p;
        return Zp(static_cast<std::uint32_t>(n.get_ui()), f.p) / Zp(static_cast<std::uint32_t>(d.get_ui()), f.p);
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    std::uint32_t value() const { return v_; }

    Zp operator+(const Zp& o) const {
        std::uint32_t p = mod(o);
        if (p == 0) return {};
        std::uint64_t s = std::uint64_t{v_} + o.v_;
        return Zp(static_cast<std::uint32_t>(s % p), p);
    }
    Zp operator-() const { return v_ == 0 ? *this : Zp(p_ - v_, p_); }
    Zp operator-(const Zp& o) const { return *this + (-o); }
    Zp operator*(const Zp& o) const {
        std::uint32_t p = mod(o);
        if (p == 0) return {};
        return Zp(static_cast<std::uint32_t>(std::uint64_t{v_} * o.v_ % p), p);
    }
    Zp inverse() const {
        if (v_ == 0) throw MathError("division by zero in prime field");
        long long a = v_, m = p_, x0 = 1, x1 = 0;
        while (m != 0) {
            long long q = a / m;
            long long t = a - q * m;
            a = m;
            m = t;
            t = x0 - q * x1;
            x0 = x1;
            x1 = t;
        }
        long long r = x0 % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return Zp(static_cast<std::uint32_t>(r), p_);
    }
    Zp operator/(const Zp& o) const { return *this * o.inverse(); }
    Zp& operator+=(const Zp& o) { return *this = *this + o; }
    Zp& operator-=(const Zp& o) { return *this = *this - o; }
    Zp& operator*=(const Zp& o) { return *this = *this * o; }

    friend bool operator==(const Zp& a, const Zp& b) { return a.v_ == b.v_; }

    /// Printed in the symmetric range (-p/2, p/2]; parsing accepts either form.
    std::string to_string() const {
        if (v_ > p_ / 2) return "-" + std::to_string(p_ - v_);
        return std::to_string(v_);
    }

private:
    Zp(std::uint32_t v, std::uint32_t p) : v_(v), p_(p) {}
    std::uint32_t mod(const Zp& o) const { return p_ != 0 ? p_ : o.p_; }

    std::uint32_t v_ = 0;
    std::uint32_t p_ = 0;
};

class Rational {
public:
    Rational() = default;
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    static Rational from_int(const Field&, long long n) { return Rational(mpq_class(mpz_class(std::to_string(n)))); }

    static Rational from_fraction(const Field&, const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw InputError("zero denominator in rational coefficient");
        return Rational(mpq_class(num, den));
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    const mpq_class& value() const { return v_; }

    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational inverse() const {
        if (is_zero()) throw MathError("division by zero in QQ");
        return Rational(mpq_class(1 / v_));
    }
    Rational operator/(const Rational& o) const { return *this * o.inverse(); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }

    std::string to_string() const { return v_.get_str(); }

private:
    mpq_class v_;
};

template <class K>
concept Coefficient = requires(const K a, const K b, const Field f) {
    { a + b } -> std::same_as<K>;
    { a * b } -> std::same_as<K>;
    { a / b } -> std::same_as<K>;
    { -a } -> std::same_as<K>;
    { a.is_zero() } -> std::same_as<bool>;
    { a.to_string() } -> std::same_as<std::string>;
    { K::from_int(f, 1LL) } -> std::same_as<K>;
};

/// Uniform small integer coefficient in [-bound, bound], used by seeded generators.
template <Coefficient K, class Rng>
K random_coefficient(const Field& f, Rng& rng, int bound = 3) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    return K::from_int(f, dist(rng));
}

/// Coefficient drawn from the whole field (prime fields) or a wide integer range (QQ).
template <Coefficient K, class Rng>
K generic_coefficient(const Field& f, Rng& rng) {
    if (f.is_prime_field()) {
        std::uniform_int_distribution<long long> dist(0, f.p - 1);
        return K::from_int(f, dist(rng));
    }
    std::uniform_int_distribution<long long> dist(-1000, 1000);
    return K::from_int(f, dist(rng));
}

}  // namespace gmf
