#pragma once

#include <cstdint>

#include "fwps/error.hpp"

namespace fwps::checked {

// All lattice arithmetic runs through these helpers: any intermediate that
// leaves the int64 range raises Errc::Overflow instead of wrapping.

[[noreturn]] inline void fail_overflow() {
    throw Error(Errc::Overflow, "integer overflow in exact arithmetic");
}

inline std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) fail_overflow();
    return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) fail_overflow();
    return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) fail_overflow();
    return r;
}

inline std::int64_t neg(std::int64_t a) { return sub(0, a); }

inline std::int64_t abs(std::int64_t a) { return a < 0 ? neg(a) : a; }

/// a - q*b without intermediate wraparound.
inline std::int64_t sub_mul(std::int64_t a, std::int64_t q, std::int64_t b) {
    return sub(a, mul(q, b));
}

/// Least nonnegative residue of a modulo m (m >= 1).
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace fwps::checked
