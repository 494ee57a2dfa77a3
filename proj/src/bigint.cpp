#include "frobenius/bigint.hpp"

#include <stdexcept>

namespace frob {

std::string to_string(const BigInt& v) { return v.get_str(10); }

std::int64_t to_int64(const BigInt& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + to_string(v));
  return static_cast<std::int64_t>(v.get_si());
}

std::uint64_t to_uint64(const BigInt& v) {
  if (sgn(v) < 0 || !v.fits_ulong_p())
    throw std::overflow_error("integer is not an unsigned 64-bit value: " + to_string(v));
  return static_cast<std::uint64_t>(v.get_ui());
}

BigInt isqrt(const BigInt& x) {
  if (sgn(x) < 0) throw std::domain_error("isqrt of a negative integer");
  if (x < 2) return x;
  // Start above the root: 2^ceil(bits/2) > sqrt(x). The iteration then
  // decreases monotonically until it reaches the floor.
  const auto bits = mpz_sizeinbase(x.get_mpz_t(), 2);
  BigInt r = 1;
  r <<= static_cast<mp_bitcnt_t>((bits + 1) / 2);
  for (;;) {
    BigInt next = (r + x / r) >> 1;
    if (next >= r) return r;
    r = next;
  }
}

std::uint64_t isqrt(std::uint64_t x) {
  if (x < 2) return x;
  int bits = 64 - __builtin_clzll(x);
  std::uint64_t r = std::uint64_t{1} << ((bits + 1) / 2);
  for (;;) {
    std::uint64_t next = (r + x / r) >> 1;
    if (next >= r) return r;
    r = next;
  }
}

}  // namespace frob
