#include <doctest.h>

#include <random>

#include "frobenius/bigint.hpp"

using frob::BigInt;

namespace {

BigInt gmp_sqrt(const BigInt& x) {
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

}  // namespace

TEST_CASE("isqrt small values") {
  for (std::uint64_t x = 0; x <= 10000; ++x) {
    const std::uint64_t r = frob::isqrt(x);
    CHECK(r * r <= x);
    CHECK((r + 1) * (r + 1) > x);
  }
}

TEST_CASE("isqrt matches GMP around squares and pronic numbers") {
  for (std::uint64_t k = 1; k <= 5000; ++k) {
    for (std::uint64_t v : {k * k - 1, k * k, k * k + 1, k * (k + 1) - 1, k * (k + 1), k * (k + 1) + 1}) {
      CHECK(frob::isqrt(frob::to_big(v)) == gmp_sqrt(frob::to_big(v)));
      CHECK(frob::to_big(frob::isqrt(v)) == gmp_sqrt(frob::to_big(v)));
    }
  }
}

TEST_CASE("isqrt on large machine words and big integers") {
  const std::uint64_t top = ~std::uint64_t{0};
  CHECK(frob::isqrt(top) == 4294967295u);
  CHECK(frob::isqrt(std::uint64_t{4294967296} * 4294967296u - 1) == 4294967295u);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    BigInt x = frob::to_big(rng());
    x = x * frob::to_big(rng()) * frob::to_big(rng()) + frob::to_big(rng());
    CHECK(frob::isqrt(x) == gmp_sqrt(x));
    const BigInt sq = x * x;
    CHECK(frob::isqrt(sq) == x);
    CHECK(frob::isqrt(BigInt(sq - 1)) == x - 1);
  }
}

TEST_CASE("isqrt rejects negatives") { CHECK_THROWS(frob::isqrt(BigInt(-1))); }

TEST_CASE("conversions") {
  CHECK(frob::to_string(BigInt("123456789012345678901234567890")) == "123456789012345678901234567890");
  CHECK(frob::to_int64(BigInt(-5)) == -5);
  CHECK_THROWS_AS(frob::to_uint64(BigInt(-1)), std::overflow_error);
  CHECK_THROWS_AS(frob::to_int64(BigInt("99999999999999999999")), std::overflow_error);
}
