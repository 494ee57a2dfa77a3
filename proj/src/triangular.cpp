#include "frobenius/triangular.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "frobenius/errors.hpp"
#include "frobenius/genfrob.hpp"

namespace frob {

std::string_view to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }
std::string_view to_string(BoundMode m) { return m == BoundMode::strict ? "strict" : "relaxed"; }

std::string_view to_string(DifferenceCase c) {
  switch (c) {
    case DifferenceCase::outside_set: return "outside_set";
    case DifferenceCase::even_in_set: return "even_in_set";
    case DifferenceCase::odd_square: return "odd_square";
    case DifferenceCase::odd_pronic: return "odd_pronic";
  }
  return "unknown";
}

namespace {

void require_index(std::uint64_t n) {
  if (n == 0) throw precondition_error("triangular index must be >= 1");
  if (n > max_triangular_index)
    throw precondition_error("triangular index " + std::to_string(n) + " exceeds " +
                             std::to_string(max_triangular_index));
}

// floor((sqrt(4s+5) - 1) / 2), equal to floor((floor(sqrt(4s+5)) - 1) / 2).
std::uint64_t odd_root(std::uint64_t s) {
  const BigInt r = isqrt(4 * to_big(s) + 5);
  return to_uint64((r - 1) / 2);
}

std::uint64_t even_root(std::uint64_t s) { return to_uint64(isqrt(to_big(s) + 1)); }

bool relaxed_allowed(std::uint64_t s) { return s <= 2 || !in_exception_set(s); }

std::string bound_message(std::uint64_t n, std::uint64_t s, BoundMode mode) {
  const Parity p = parity_of(n);
  const std::int64_t bound = n_bound(s, p);
  const bool relaxed = mode == BoundMode::relaxed && relaxed_allowed(s);
  return "n = " + std::to_string(n) + " is outside the proven range for s = " +
         std::to_string(s) + ": need " + std::string(to_string(p)) + " n " +
         (relaxed ? ">= " : "> ") + "N_s = " + std::to_string(bound);
}

void require_bound(std::uint64_t n, std::uint64_t s, BoundMode mode) {
  if (!bound_holds(n, s, mode)) throw bound_error(bound_message(n, s, mode));
}

}  // namespace

BigInt triangular_number(std::uint64_t n) {
  if (n == 0) throw precondition_error("triangular index must be >= 1");
  return to_big(n) * (to_big(n) + 1) / 2;
}

Tuple ReducedTriple::as_tuple() const { return Tuple({t_n, b, c}); }

ReducedTriple reduced_triple(std::uint64_t n) {
  require_index(n);
  ReducedTriple r{};
  r.n = n;
  r.t_n = n * (n + 1) / 2;
  if (n % 2 == 0) {
    r.d1 = (n + 2) / 2;
    r.b = n + 1;
    r.c = n + 3;
  } else {
    r.d1 = n + 2;
    r.b = (n + 1) / 2;
    r.c = (n + 3) / 2;
  }
  return r;
}

Tuple triangular_tuple(std::uint64_t n) {
  require_index(n);
  return Tuple({n * (n + 1) / 2, (n + 1) * (n + 2) / 2, (n + 2) * (n + 3) / 2});
}

SDecomposition s_decompose(std::uint64_t s) {
  const BigInt root = isqrt(4 * to_big(s) + 1);
  const std::uint64_t k = to_uint64((root - 1) / 2);
  return {s, k, s - k * (k + 1)};
}

ClosedParams closed_params(std::uint64_t s) {
  const std::uint64_t r = isqrt(s);
  const std::uint64_t delta = s >= r * r + r ? 1 : 0;
  return {2 * r + 2 + delta, s - r * r - delta * r, delta};
}

ParityPair xy_pair(std::uint64_t s, Parity parity) {
  const auto [_, k, i] = s_decompose(s);
  if (parity == Parity::even) {
    if (i <= k) return {parity, i, 2 * (k - i)};
    return {parity, i - k - 1, 4 * k + 3 - 2 * i};
  }
  if (i <= k) return {parity, 2 * i, k - i};
  return {parity, 2 * (i - k) - 1, 2 * k + 1 - i};
}

std::int64_t n_bound(std::uint64_t s, Parity parity) {
  if (parity == Parity::even) return 6 * static_cast<std::int64_t>(even_root(s)) - 6;
  return 6 * static_cast<std::int64_t>(odd_root(s)) - 3;
}

std::int64_t n_bound_piecewise(std::uint64_t s, Parity parity) {
  const auto [_, k, i] = s_decompose(s);
  const auto k6 = 6 * static_cast<std::int64_t>(k);
  if (parity == Parity::even) return i < k ? k6 - 6 : k6;
  return i <= 2 * k ? k6 - 3 : k6 + 3;
}

SetMembership square_or_pronic(std::uint64_t s) {
  if (s == 0) return {};
  const std::uint64_t r = isqrt(s);
  if (r * r == s) return {SquarePronic::square, r};
  if (r * (r + 1) == s) return {SquarePronic::pronic, r};
  return {};
}

bool in_exception_set(std::uint64_t s) {
  return square_or_pronic(s).kind != SquarePronic::neither;
}

bool bound_holds(std::uint64_t n, std::uint64_t s, BoundMode mode) {
  const auto bound = n_bound(s, parity_of(n));
  const auto value = static_cast<std::int64_t>(n);
  if (mode == BoundMode::relaxed && relaxed_allowed(s)) return value >= bound;
  return value > bound;
}

BigInt g_triangular_formula(std::uint64_t n, std::uint64_t s) {
  const auto [q, c, delta] = closed_params(s);
  const BigInt nn = to_big(n);
  BigInt linear = to_big(q) * nn + 6 * to_big(c);
  if (parity_of(n) == Parity::odd) linear -= 3 * to_big(delta);
  const BigInt numerator = (nn + 1) * (nn + 2) * linear;
  if (!mpz_divisible_ui_p(numerator.get_mpz_t(), 4))
    throw std::logic_error("closed-form numerator not divisible by 4 at n=" + std::to_string(n) +
                           ", s=" + std::to_string(s));
  return numerator / 4 - 1;
}

BigInt g_triangular_closed(std::uint64_t n, std::uint64_t s, BoundMode mode) {
  if (n == 0) throw precondition_error("triangular index must be >= 1");
  require_bound(n, s, mode);
  return g_triangular_formula(n, s);
}

BigInt g_reduced_closed(std::uint64_t n, std::uint64_t s, BoundMode mode) {
  const auto triple = reduced_triple(n);
  require_bound(n, s, mode);
  const auto [_, x, y] = xy_pair(s, parity_of(n));
  return g_two_var(triple.b, triple.c, x) + to_big(y) * to_big(triple.t_n);
}

Difference g_difference_closed(std::uint64_t n, std::uint64_t s) {
  if (n == 0) throw precondition_error("triangular index must be >= 1");
  const Parity parity = parity_of(n);
  const std::int64_t bound = n_bound(s + 1, parity);
  if (static_cast<std::int64_t>(n) <= bound)
    throw bound_error("n = " + std::to_string(n) + " is outside the proven range for the step " +
                      std::to_string(s) + " -> " + std::to_string(s + 1) + ": need " +
                      std::string(to_string(parity)) + " n > N_{s+1} = " + std::to_string(bound));

  const auto member = square_or_pronic(s + 1);
  const BigInt nn = to_big(n);
  const BigInt k6 = 6 * to_big(member.k);
  Difference d{};
  d.k = member.k;
  BigInt factor;
  if (member.kind == SquarePronic::neither) {
    d.which = DifferenceCase::outside_set;
    factor = 6;
  } else if (parity == Parity::even) {
    d.which = DifferenceCase::even_in_set;
    factor = nn - k6 + 6;
  } else if (member.kind == SquarePronic::square) {
    d.which = DifferenceCase::odd_square;
    factor = nn - k6 + 9;
  } else {
    d.which = DifferenceCase::odd_pronic;
    factor = nn - k6 + 3;
  }
  const BigInt numerator = factor * (nn + 1) * (nn + 2);
  if (!mpz_divisible_ui_p(numerator.get_mpz_t(), 4))
    throw std::logic_error("difference numerator not divisible by 4");
  d.value = numerator / 4;
  return d;
}

Parity general_triple_branch(std::uint64_t a1, std::uint64_t a2, std::uint64_t a3,
                             std::uint64_t s) {
  if (s == 0) throw precondition_error("the three-integer generalization needs s >= 1");
  if (a1 < 2 || a2 < 2 || a3 < 2) throw precondition_error("A1, A2, A3 must all exceed 1");
  if (std::gcd(std::gcd(a1, a2), a3) != 1) throw precondition_error("gcd(A1, A2, A3) must be 1");
  if (a1 % a2 != 0) throw precondition_error("A1 must be a multiple of A2");

  // ratio = num / den = A2*A3 / A1
  const BigInt num = to_big(a2) * to_big(a3);
  const BigInt den = to_big(a1);
  const std::uint64_t k = s_decompose(s).k;
  const std::string ratio = "A2*A3/A1 = " + to_string(num) + "/" + to_string(den);

  const std::uint64_t k_odd = odd_root(s);
  const bool above_half = 2 * num > den;
  const bool below_odd_cap =
      k == 0 ? num < den : num * (2 * to_big(k_odd) - 1) < to_big(k_odd) * den;
  if (above_half && below_odd_cap) return Parity::odd;

  if (num > 2 * den) {
    const std::uint64_t k_even = even_root(s) - 1;
    if (k == 0 || k_even == 0)
      throw undefined_bound(ratio + " is in the even range, but K_s^ev = floor(sqrt(s+1)) - 1 = " +
                            std::to_string(k_even) + " for s = " + std::to_string(s) +
                            ", so the bound 2 + 1/K_s^ev is undefined");
    if (to_big(k_even) * num < (2 * to_big(k_even) + 1) * den) return Parity::even;
    throw condition_not_met(ratio + " is not < 2 + 1/K_s^ev = 2 + 1/" + std::to_string(k_even));
  }
  if (!above_half) throw condition_not_met(ratio + " is not > 1/2");
  const std::string odd_cap =
      k == 0 ? std::string("1")
             : std::to_string(k_odd) + "/" + std::to_string(2 * k_odd - 1) + " = K_s^od/(2K_s^od - 1)";
  throw condition_not_met(ratio + " is not < " + odd_cap + " (odd branch) and not > 2 (even branch)");
}

BigInt g_general_triple(std::uint64_t a1, std::uint64_t a2, std::uint64_t a3, std::uint64_t s) {
  const Parity branch = general_triple_branch(a1, a2, a3, s);
  const auto [_, x, y] = xy_pair(s, branch);
  return g_two_var(a2, a3, x) + to_big(y) * to_big(a1);
}

}  // namespace frob
