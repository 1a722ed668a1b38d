#pragma once

// Exact scalars: rationals (GMP) and prime fields F_p.

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>

#include "errors.hpp"

namespace repalg {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Runtime description of the coefficient field.
class Field {
public:
    enum class Kind { rationals, prime };

    static Field rationals() { return Field(Kind::rationals, 0); }

    static Field prime(std::uint32_t p) {
        if (!is_prime(p)) throw DomainError("F_p requires a prime, got " + std::to_string(p));
        return Field(Kind::prime, p);
    }

    /// Accepts "Q" or "F<p>", e.g. "F101".
    static Field parse(const std::string& s) {
        if (s == "Q") return rationals();
        if (s.size() >= 2 && s[0] == 'F') {
            std::size_t used = 0;
            unsigned long p = 0;
            try {
                p = std::stoul(s.substr(1), &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == s.size() - 1 && p <= 0xffffffffUL) return prime(static_cast<std::uint32_t>(p));
        }
        throw ParseError("bad-field", "field must be Q or F<p>, got '" + s + "'");
    }

    Kind kind() const { return kind_; }
    std::uint32_t characteristic() const { return p_; }
    bool is_rationals() const { return kind_ == Kind::rationals; }

    std::string to_string() const { return is_rationals() ? "Q" : "F" + std::to_string(p_); }

    bool operator==(const Field&) const = default;

private:
    Field(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::uint32_t p_;
};

/// Arbitrary-precision rational number, always in lowest terms.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}  // NOLINT: integer literals are scalars
    Rational(long num, long den) : q_(num, den) {
        if (den == 0) throw DomainError("zero denominator");
        q_.canonicalize();
    }
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    const mpq_class& value() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }

    Rational inverse() const {
        if (is_zero()) throw DomainError("division by zero");
        return Rational(mpq_class(1) / q_);
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
    friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }
    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& b) { q_ += b.q_; return *this; }
    Rational& operator-=(const Rational& b) { q_ -= b.q_; return *this; }
    Rational& operator*=(const Rational& b) { q_ *= b.q_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }

    /// "a/b" with b > 0 in lowest terms, or "a" when b = 1.
    std::string to_string() const {
        if (q_.get_den() == 1) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    static Rational parse(const std::string& s) {
        mpq_class q;
        auto slash = s.find('/');
        auto valid_int = [](const std::string& t) {
            std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
            if (i == t.size()) return false;
            for (; i < t.size(); ++i)
                if (t[i] < '0' || t[i] > '9') return false;
            return true;
        };
        std::string num = s.substr(0, slash);
        std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
        if (!valid_int(num) || !valid_int(den) || den[0] == '-')
            throw ParseError("bad-scalar", "not a rational: '" + s + "'");
        mpz_class n(num[0] == '+' ? num.substr(1) : num), d(den[0] == '+' ? den.substr(1) : den);
        if (d == 0) throw ParseError("bad-scalar", "zero denominator in '" + s + "'");
        return Rational(mpq_class(n, d));
    }

private:
    mpq_class q_;
};

/// Element of F_p. An element with modulus 0 is an integer literal (as
/// produced by `Zp{}` or `Zp{1}`) that adopts the modulus of whatever it is
/// combined with; combining two different nonzero moduli throws.
class Zp {
public:
    Zp() = default;
    Zp(long v) : v_(v), p_(0) {}  // NOLINT: integer literals are scalars
    Zp(long long v, std::uint32_t p) : p_(p) {
        if (p == 0) throw DomainError("modulus must be positive");
        v_ = normalize(v, p);
    }

    std::uint32_t modulus() const { return p_; }
    std::int64_t value() const { return v_; }

    bool is_zero() const { return v_ == 0; }

    Zp inverse() const {
        if (is_zero()) throw DomainError("division by zero");
        if (p_ == 0) {
            if (v_ == 1 || v_ == -1) return *this;
            throw DomainError("cannot invert an integer literal without a modulus");
        }
        // extended Euclid
        std::int64_t a = v_, m = p_, x0 = 1, x1 = 0;
        while (m != 0) {
            std::int64_t q = a / m;
            std::int64_t t = a - q * m;
            a = m;
            m = t;
            t = x0 - q * x1;
            x0 = x1;
            x1 = t;
        }
        return Zp(x0, p_);
    }

    friend Zp operator+(const Zp& a, const Zp& b) { return make(a.v_ + b.v_, merge(a.p_, b.p_)); }
    friend Zp operator-(const Zp& a, const Zp& b) { return make(a.v_ - b.v_, merge(a.p_, b.p_)); }
    friend Zp operator*(const Zp& a, const Zp& b) {
        std::uint32_t p = merge(a.p_, b.p_);
        if (p == 0) return Zp(static_cast<long>(a.v_ * b.v_));
        return Zp(static_cast<long long>((static_cast<__int128>(a.v_) * b.v_) % p), p);
    }
    friend Zp operator/(const Zp& a, const Zp& b) { return a * b.inverse(); }
    Zp operator-() const { return make(-v_, p_); }
    Zp& operator+=(const Zp& b) { return *this = *this + b; }
    Zp& operator-=(const Zp& b) { return *this = *this - b; }
    Zp& operator*=(const Zp& b) { return *this = *this * b; }

    friend bool operator==(const Zp& a, const Zp& b) {
        std::uint32_t p = merge(a.p_, b.p_);
        if (p == 0) return a.v_ == b.v_;
        return normalize(a.v_, p) == normalize(b.v_, p);
    }

    /// Canonical representative in 0..p-1.
    std::string to_string() const { return std::to_string(v_); }

private:
    static std::int64_t normalize(long long v, std::uint32_t p) {
        long long r = v % static_cast<long long>(p);
        return r < 0 ? r + p : r;
    }
    static std::uint32_t merge(std::uint32_t p, std::uint32_t q) {
        if (p == 0) return q;
        if (q == 0 || p == q) return p;
        throw FieldMismatch("F" + std::to_string(p) + " vs F" + std::to_string(q));
    }
    static Zp make(long long v, std::uint32_t p) { return p == 0 ? Zp(static_cast<long>(v)) : Zp(v, p); }

    std::int64_t v_ = 0;
    std::uint32_t p_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const Zp& x) { return os << x.to_string(); }

template <class K>
concept FieldScalar = requires(K a, K b) {
    { a + b } -> std::convertible_to<K>;
    { a - b } -> std::convertible_to<K>;
    { a * b } -> std::convertible_to<K>;
    { a / b } -> std::convertible_to<K>;
    { -a } -> std::convertible_to<K>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.inverse() } -> std::convertible_to<K>;
    { a.to_string() } -> std::convertible_to<std::string>;
    K(0);
    K(1);
};

/// Per-type bridge between a scalar type and a runtime Field.
template <class K>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static bool supports(const Field& f) { return f.is_rationals(); }
    static Rational from_int(long v, const Field&) { return Rational(v); }
    static Rational parse(const std::string& s, const Field&) { return Rational::parse(s); }
};

template <>
struct ScalarTraits<Zp> {
    static bool supports(const Field& f) { return !f.is_rationals(); }
    static Zp from_int(long v, const Field& f) { return Zp(v, f.characteristic()); }
    static Zp parse(const std::string& s, const Field& f) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (s.empty() || used != s.size()) throw ParseError("bad-scalar", "not an integer: '" + s + "'");
        return Zp(v, f.characteristic());
    }
};

template <class K>
void require_field(const Field& f) {
    if (!ScalarTraits<K>::supports(f))
        throw FieldMismatch("scalar type does not implement field " + f.to_string());
}

}  // namespace repalg
