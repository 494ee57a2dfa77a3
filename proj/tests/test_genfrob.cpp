#include <doctest.h>

#include <numeric>

#include "frobenius/errors.hpp"
#include "frobenius/genfrob.hpp"
#include "naive.hpp"

using frob::BigInt;
using frob::Tuple;

namespace {

std::vector<std::uint64_t> as_vector(const Tuple& t) { return {t.elements().begin(), t.elements().end()}; }

// Horizon past g(A; s): any coprime pair (a, b) in A bounds it by (s+1)ab.
std::uint64_t horizon(const Tuple& t, std::uint64_t s) {
  std::uint64_t best = ~std::uint64_t{0};
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (std::gcd(t[i], t[j]) == 1) best = std::min(best, (s + 1) * t[i] * t[j]);
  return best;
}

}  // namespace

TEST_CASE("g_two_var examples") {
  CHECK(frob::g_two_var(7, 11, 0) == 59);
  CHECK(frob::g_two_var(1, 2, 0) == -1);
  CHECK(frob::g_two_var(7, 11, 1) == 136);
  CHECK(frob::count_representations(136, Tuple{7, 11}) == 1);
  for (std::uint64_t m = 137; m <= 136 + 7; ++m) CHECK(frob::count_representations(m, Tuple{7, 11}) >= 2);
  CHECK_THROWS_AS(frob::g_two_var(4, 6, 0), frob::precondition_error);
}

TEST_CASE("g_search examples") {
  CHECK(frob::g_search(Tuple{7, 11}, 0, 10000).value == 59);
  CHECK(frob::g_search(Tuple{3, 6, 10}, 0, 10000).value == 17);
  CHECK(frob::g_search(Tuple{3, 10}, 0, 10000).value == 17);
  CHECK(frob::g_search(Tuple{1, 2}, 5, 100).value == 9);
  CHECK(frob::g_search(Tuple{1, 2}, 0, 100).value == -1);
  CHECK(frob::g_search(Tuple{6, 10, 15}, 0).value == 29);
}

TEST_CASE("g_search reports an exhausted cap") {
  CHECK_THROWS_AS(frob::g_search(Tuple{7, 11}, 0, 30), frob::cap_exhausted);
}

TEST_CASE("property: oracle contract and witness window") {
  for (const Tuple& t : {Tuple{7, 11}, Tuple{3, 6, 10}, Tuple{4, 11, 20}, Tuple{10, 15, 21}, Tuple{5, 8, 13}}) {
    for (std::uint64_t s = 0; s <= 4; ++s) {
      const auto r = frob::g_search(t, s);
      const auto v = frob::to_int64(r.value);
      if (v >= 0) CHECK(naive::count(static_cast<std::uint64_t>(v), as_vector(t)) <= s);
      REQUIRE(r.witness_window);
      CHECK(r.witness_window->size() == t.min_element());
      std::int64_t expect_n = v + 1;
      for (const auto& e : *r.witness_window) {
        CHECK(static_cast<std::int64_t>(e.n) == expect_n++);
        CHECK(e.count >= s + 1);
        CHECK(e.count == naive::count(e.n, as_vector(t)));
      }
      CHECK(v == naive::g(as_vector(t), s, horizon(t, s)));
    }
  }
}

TEST_CASE("property: two-variable exactness") {
  for (std::uint64_t a = 1; a <= 12; ++a)
    for (std::uint64_t b = a + 1; b <= 12; ++b) {
      if (std::gcd(a, b) != 1) continue;
      for (std::uint64_t s = 0; s <= 5; ++s) {
        const BigInt g = frob::g_two_var(a, b, s);
        CHECK(frob::g_search(Tuple{a, b}, s).value == g);
        CHECK(frob::to_int64(g) == naive::g({a, b}, s, (s + 1) * a * b));
        if (sgn(g) >= 0) CHECK(naive::count(frob::to_uint64(g), {a, b}) == s);
      }
    }
}

TEST_CASE("property: monotone in s") {
  for (const Tuple& t : {Tuple{7, 11}, Tuple{3, 10}, Tuple{5, 8}})
    for (std::uint64_t s = 0; s < 6; ++s) CHECK(frob::g_search(t, s + 1).value > frob::g_search(t, s).value);
  // With three or more elements a count can jump past s+1 in one step, so g
  // may stay put: g(6,10,15; s) = 89 for s = 3, 4, 5.
  for (const Tuple& t : {Tuple{3, 6, 10}, Tuple{4, 11, 20}, Tuple{6, 10, 15}, Tuple{5, 8, 13}})
    for (std::uint64_t s = 0; s < 8; ++s) CHECK(frob::g_search(t, s + 1).value >= frob::g_search(t, s).value);
  CHECK(frob::g_search(Tuple{6, 10, 15}, 3).value == 89);
  CHECK(frob::g_search(Tuple{6, 10, 15}, 5).value == 89);
}

TEST_CASE("beck_kifer_g examples") {
  const auto oracle = frob::oracle_solver();
  const auto step = frob::ReductionStep::of(Tuple{10, 15, 21});
  CHECK(step.ell == 3);
  CHECK(step.reduced == Tuple{10, 5, 7});
  CHECK(frob::g_search(Tuple{10, 5, 7}, 0).value == 23);
  CHECK(frob::beck_kifer_g(Tuple{10, 15, 21}, 0, oracle) == 89);
  CHECK(frob::g_search(Tuple{10, 15, 21}, 0).value == 89);
  CHECK(frob::beck_kifer_g(Tuple{7, 11}, 0, oracle) == 59);

  const BigInt lhs = frob::beck_kifer_g(Tuple{3, 6, 10}, 1, oracle);
  const BigInt rhs = 2 * frob::g_search(Tuple{3, 3, 5}, 1).value + 3;
  CHECK(lhs == rhs);
  CHECK(frob::g_search(Tuple{3, 6, 10}, 1).value == rhs);
}

TEST_CASE("property: Beck-Kifer identity on all small triples") {
  const auto oracle = frob::oracle_solver();
  int checked = 0;
  for (std::uint64_t a1 = 2; a1 <= 14; ++a1)
    for (std::uint64_t a2 = 2; a2 <= 14; ++a2)
      for (std::uint64_t a3 = a2; a3 <= 14; ++a3) {
        if (std::gcd(a2, a3) < 2 || std::gcd(a1, std::gcd(a2, a3)) != 1) continue;
        const Tuple t{a1, a2, a3};
        for (std::uint64_t s = 0; s <= 3; ++s) {
          CHECK(frob::beck_kifer_g(t, s, oracle) == frob::g_search(t, s).value);
          ++checked;
        }
      }
  CHECK(checked > 100);
}

TEST_CASE("classify_shifted examples") {
  CHECK(frob::classify_shifted(5, 7, 0, 5, 1) == 1);
  CHECK(naive::count(28, {5, 7}) == 1);
  CHECK(frob::classify_shifted(5, 7, 2, 5, 0) == 2);
  CHECK(frob::g_two_var(7, 11, 3) == 290);
  CHECK(frob::classify_shifted(7, 11, 3, 77, -2) == 1);
  CHECK(naive::count(136, {7, 11}) == 1);
}

TEST_CASE("property: classify_shifted equals the count for multiples of a or b") {
  for (std::uint64_t a = 2; a <= 9; ++a)
    for (std::uint64_t b = a + 1; b <= 10; ++b) {
      if (std::gcd(a, b) != 1) continue;
      for (std::uint64_t s = 0; s <= 3; ++s)
        for (std::uint64_t c : {a, b, 2 * a, 3 * b, a * b})
          for (std::int64_t j = -3; j <= 6; ++j) {
            const BigInt m = frob::g_two_var(a, b, s) + BigInt(static_cast<long>(j)) * frob::to_big(c);
            if (sgn(m) < 0) continue;
            CHECK(frob::classify_shifted(a, b, s, c, j) == naive::count(frob::to_uint64(m), {a, b}));
          }
    }
}

TEST_CASE("property: shifted comparison over multiples of a") {
  for (std::uint64_t a = 2; a <= 7; ++a)
    for (std::uint64_t b = a + 1; b <= 8; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const Tuple pair{a, b};
      for (std::uint64_t s = 0; s <= 4; ++s) {
        const auto g = frob::to_uint64(frob::g_two_var(a, b, s));
        for (std::uint64_t k = 0; k <= 4; ++k) {
          const auto table = frob::count_prefix(g + k * a + 3 * a * b, pair);
          for (std::uint64_t m = g + k * a + 1; m <= g + k * a + 3 * a * b; ++m)
            for (std::uint64_t j = 0; j <= k; ++j)
              CHECK(table.count(m - j * a) >= table.count(g + (k - j) * a));
        }
      }
    }
}
