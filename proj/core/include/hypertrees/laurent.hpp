#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>

#include "hypertrees/numeric.hpp"

namespace hypertrees {

/// Laurent polynomial in the weight variable t with exact coefficients.
/// Zero coefficients are never stored.
template <typename C>
class Laurent {
public:
    Laurent() = default;
    explicit Laurent(C constant) {
        if (constant != 0) c_[0] = std::move(constant);
    }
    static Laurent monomial(int exp, C coeff) {
        Laurent p;
        if (coeff != 0) p.c_[exp] = std::move(coeff);
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int min_exponent() const { return c_.empty() ? 0 : c_.begin()->first; }
    int max_exponent() const { return c_.empty() ? 0 : c_.rbegin()->first; }

    C at(int exp) const {
        auto it = c_.find(exp);
        return it == c_.end() ? C(0) : it->second;
    }

    void add(int exp, const C& coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = c_.try_emplace(exp, coeff);
        if (!inserted) {
            it->second = add_coeff(it->second, coeff);
            if (it->second == 0) c_.erase(it);
        }
    }

    Laurent& operator+=(const Laurent& o) {
        for (const auto& [e, v] : o.c_) add(e, v);
        return *this;
    }
    friend Laurent operator+(Laurent a, const Laurent& b) { a += b; return a; }

    Laurent& operator-=(const Laurent& o) {
        for (const auto& [e, v] : o.c_) add(e, negate_coeff(v));
        return *this;
    }
    friend Laurent operator-(Laurent a, const Laurent& b) { a -= b; return a; }

    /// Multiply by c * t^shift.
    Laurent scaled(const C& k, int shift = 0) const {
        Laurent r;
        if (k == 0) return r;
        for (const auto& [e, v] : c_) r.add(e + shift, mul_coeff(v, k));
        return r;
    }

    friend bool operator==(const Laurent& a, const Laurent& b) { return a.c_ == b.c_; }

    const std::map<int, C>& coefficients() const { return c_; }

    /// "a" for constants, otherwise "a*t^j" terms joined by " + ".
    std::string str() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, v] : c_) {
            if (!first) os << " + ";
            first = false;
            os << v;
            if (e != 0) os << "*t^" << e;
        }
        return os.str();
    }

private:
    static C add_coeff(const C& a, const C& b) {
        if constexpr (std::is_same_v<C, std::int64_t>) return checked_add(a, b);
        else return a + b;
    }
    static C mul_coeff(const C& a, const C& b) {
        if constexpr (std::is_same_v<C, std::int64_t>) return checked_mul(a, b);
        else return a * b;
    }
    static C negate_coeff(const C& a) { return C(0) - a; }

    std::map<int, C> c_;
};

/// Exact chain count with optional t-weighting (exponent = rank of the
/// chain maximum; -1 occurs only for the one-vertex hypertree).
using WeightedCount = Laurent<std::int64_t>;

/// Character values that carry a t-grading.
using LaurentRational = Laurent<Rational>;

inline LaurentRational to_rational(const WeightedCount& w) {
    LaurentRational r;
    for (const auto& [e, v] : w.coefficients()) r.add(e, Rational(v));
    return r;
}

}  // namespace hypertrees
