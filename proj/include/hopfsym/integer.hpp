#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hopfsym {

/// Coefficient ring for Schur, tensor and subgroup expansions. Arithmetic
/// on coefficients goes through the checked helpers below, so results are
/// either exact or an exception.
using Integer = std::int64_t;

/// Exact rational used by the power-sum basis and by 4x4 matrices.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Integer checked_add(Integer a, Integer b) {
    Integer r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer coefficient overflow in addition");
    return r;
}

inline Integer checked_mul(Integer a, Integer b) {
    Integer r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer coefficient overflow in multiplication");
    return r;
}

inline Integer to_integer(const BigInt& v) {
    if (v > std::numeric_limits<Integer>::max() || v < std::numeric_limits<Integer>::min())
        throw std::overflow_error("value does not fit a 64-bit coefficient: " + v.str());
    return static_cast<Integer>(v);
}

inline Integer to_integer(const Rational& v) {
    if (boost::multiprecision::denominator(v) != 1)
        throw std::domain_error("expected an integral value, got " + v.str());
    return to_integer(BigInt(boost::multiprecision::numerator(v)));
}

}  // namespace hopfsym
