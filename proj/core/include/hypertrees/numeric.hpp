#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hypertrees {

// All arithmetic in this library is exact. Counts that provably fit use
// int64 with overflow checks; symmetric-function coefficients use rationals.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown when an input violates a structural precondition (bad labels,
/// malformed edges, size mismatches).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a computation exceeds a configured ceiling.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw ResourceLimitError("integer overflow in exact count");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw ResourceLimitError("integer overflow in exact count");
    return r;
}

inline std::string to_string(const Rational& r) {
    return r.str();
}

}  // namespace hypertrees
