#pragma once

// Elements of k[t]/(t^n). Order 1 is the base field, order 2 the dual numbers.

#include <string>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"

namespace repalg {

template <FieldScalar K>
class Truncated {
public:
    /// The zero of order 0 acts as a ring-agnostic zero, so `Truncated<K>{}`
    /// can fill a freshly allocated matrix before the ring is known.
    Truncated() = default;
    Truncated(long v) : coeffs_{K(v)}, literal_(true) {}  // NOLINT: literal embedding, order adopted on use

    explicit Truncated(std::vector<K> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw DomainError("truncated ring order must be at least 1");
    }

    static Truncated constant(const K& c, std::size_t order) {
        std::vector<K> v(order, K(0));
        if (order == 0) throw DomainError("truncated ring order must be at least 1");
        v[0] = c;
        return Truncated(std::move(v));
    }

    /// t^k in k[t]/(t^order).
    static Truncated t_power(std::size_t k, std::size_t order) {
        std::vector<K> v(order, K(0));
        if (order == 0) throw DomainError("truncated ring order must be at least 1");
        if (k < order) v[k] = K(1);
        return Truncated(std::move(v));
    }

    std::size_t order() const { return coeffs_.size(); }
    const std::vector<K>& coeffs() const { return coeffs_; }
    const K& coeff(std::size_t k) const { return coeffs_.at(k); }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    /// Units are exactly the elements with nonzero constant term.
    Truncated inverse() const {
        if (coeffs_.empty() || coeffs_[0].is_zero())
            throw DomainError("element of k[t]/(t^n) with zero constant term is not invertible");
        std::size_t n = order();
        std::vector<K> inv(n, K(0));
        K c0inv = coeffs_[0].inverse();
        inv[0] = c0inv;
        for (std::size_t k = 1; k < n; ++k) {
            K acc(0);
            for (std::size_t i = 1; i <= k; ++i) acc += coeffs_[i] * inv[k - i];
            inv[k] = -(acc * c0inv);
        }
        return Truncated(std::move(inv));
    }

    friend Truncated trunc_add(const Truncated& a, const Truncated& b) {
        std::size_t n = common_order(a, b);
        std::vector<K> r(n, K(0));
        for (std::size_t i = 0; i < n; ++i) r[i] = a.at_or_zero(i) + b.at_or_zero(i);
        return result(std::move(r), a, b);
    }

    friend Truncated trunc_mul(const Truncated& a, const Truncated& b) {
        std::size_t n = common_order(a, b);
        std::vector<K> r(n, K(0));
        for (std::size_t i = 0; i < std::min(n, a.order()); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j < n && j < b.order(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return result(std::move(r), a, b);
    }

    friend Truncated operator+(const Truncated& a, const Truncated& b) { return trunc_add(a, b); }
    friend Truncated operator*(const Truncated& a, const Truncated& b) { return trunc_mul(a, b); }
    friend Truncated operator-(const Truncated& a, const Truncated& b) { return trunc_add(a, -b); }
    friend Truncated operator/(const Truncated& a, const Truncated& b) { return trunc_mul(a, b.inverse()); }
    Truncated operator-() const {
        Truncated r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    Truncated& operator+=(const Truncated& b) { return *this = *this + b; }
    Truncated& operator-=(const Truncated& b) { return *this = *this - b; }

    friend bool operator==(const Truncated& a, const Truncated& b) {
        std::size_t n = std::max(a.order(), b.order());
        for (std::size_t i = 0; i < n; ++i)
            if (!(a.at_or_zero(i) == b.at_or_zero(i))) return false;
        return true;
    }

    /// Coefficient list, lowest degree first.
    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < coeffs_.size(); ++i) s += (i ? ", " : "") + coeffs_[i].to_string();
        return s + "]";
    }

private:
    // Order-0 and order-1 literals adapt; any other pair of distinct orders is an error.
    static std::size_t common_order(const Truncated& a, const Truncated& b) {
        if (a.order() == b.order()) return a.order();
        if (a.is_literal()) return b.order();
        if (b.is_literal()) return a.order();
        throw MixedRings("k[t]/(t^" + std::to_string(a.order()) + ") vs k[t]/(t^" + std::to_string(b.order()) + ")");
    }
    static Truncated result(std::vector<K> r, const Truncated& a, const Truncated& b) {
        Truncated out;
        out.coeffs_ = std::move(r);
        out.literal_ = a.is_literal() && b.is_literal();
        return out;
    }
    bool is_literal() const { return literal_ || coeffs_.empty(); }
    K at_or_zero(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : K(0); }

    std::vector<K> coeffs_;
    bool literal_ = false;
};

/// Image of x under k[t]/(t^n) -> k[t]/(t^k), k <= n.
template <FieldScalar K>
Truncated<K> reduce_mod_t(const Truncated<K>& x, std::size_t k) {
    if (k == 0 || k > x.order())
        throw DomainError("reduce_mod_t: target order " + std::to_string(k) + " not in [1, " +
                          std::to_string(x.order()) + "]");
    return Truncated<K>(std::vector<K>(x.coeffs().begin(), x.coeffs().begin() + static_cast<std::ptrdiff_t>(k)));
}

}  // namespace repalg
