#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace frob {

// Exact integers for counts, Frobenius values and closed-form products.
using BigInt = mpz_class;

inline BigInt to_big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }
inline BigInt to_big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

std::string to_string(const BigInt& v);

// Throws std::overflow_error when v does not fit.
std::int64_t to_int64(const BigInt& v);
std::uint64_t to_uint64(const BigInt& v);

/// Floor of the square root, by Newton iteration on exact integers.
/// Requires x >= 0.
BigInt isqrt(const BigInt& x);

/// Floor of the square root of a machine word.
std::uint64_t isqrt(std::uint64_t x);

}  // namespace frob
