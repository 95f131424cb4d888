#pragma once

#include <cstdint>
#include <limits>

#include "zbrace/errors.hpp"

namespace zbrace::checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

inline std::int64_t neg(std::int64_t a) {
    if (a == std::numeric_limits<std::int64_t>::min()) throw OverflowError("integer overflow in negation");
    return -a;
}

// a*d - b*c
inline std::int64_t cross(std::int64_t a, std::int64_t d, std::int64_t b, std::int64_t c) {
    return sub(mul(a, d), mul(b, c));
}

// a*c + b*d
inline std::int64_t dot(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    return add(mul(a, c), mul(b, d));
}

}  // namespace zbrace::checked
