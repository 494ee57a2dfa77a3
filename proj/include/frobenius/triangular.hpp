#pragma once

// Closed forms for the generalized Frobenius number of three consecutive
// triangular numbers (t_n, t_{n+1}, t_{n+2}), t_n = n(n+1)/2.
//
// Every quantity here comes from square-root floors of s. They are taken
// with exact integer square roots: floating point mis-rounds right at the
// perfect squares and pronic numbers where the parameters change.

#include <cstdint>
#include <string_view>

#include "frobenius/bigint.hpp"
#include "frobenius/repcount.hpp"

namespace frob {

enum class Parity { even, odd };
enum class BoundMode { strict, relaxed };

std::string_view to_string(Parity p);
std::string_view to_string(BoundMode m);
inline Parity parity_of(std::uint64_t n) { return n % 2 == 0 ? Parity::even : Parity::odd; }

/// s = k(k+1) + i with 0 <= i <= 2k+1.
struct SDecomposition {
  std::uint64_t s;
  std::uint64_t k;
  std::uint64_t i;
};

/// (q_s, c_s, delta_s) of the main formula.
struct ClosedParams {
  std::uint64_t q;
  std::uint64_t c;
  std::uint64_t delta;
};

/// (x_s, y_s): x_s indexes a two-variable generalized Frobenius number,
/// y_s counts copies of t_n added to it.
struct ParityPair {
  Parity parity;
  std::uint64_t x;
  std::uint64_t y;
};

/// (t_n, t_{n+1}/d1, t_{n+2}/d1) with d1 = gcd(t_{n+1}, t_{n+2}).
struct ReducedTriple {
  std::uint64_t n;
  std::uint64_t t_n;
  std::uint64_t d1;
  std::uint64_t b;
  std::uint64_t c;

  Tuple as_tuple() const;
};

/// Membership of s in {k^2} u {k(k+1)}, k >= 1.
enum class SquarePronic { neither, square, pronic };
struct SetMembership {
  SquarePronic kind = SquarePronic::neither;
  std::uint64_t k = 0;
};

/// Largest n accepted by reduced_triple / triangular_tuple.
inline constexpr std::uint64_t max_triangular_index = std::uint64_t{1} << 31;

BigInt triangular_number(std::uint64_t n);
ReducedTriple reduced_triple(std::uint64_t n);
/// (t_n, t_{n+1}, t_{n+2}) as a tuple.
Tuple triangular_tuple(std::uint64_t n);

SDecomposition s_decompose(std::uint64_t s);
ClosedParams closed_params(std::uint64_t s);
ParityPair xy_pair(std::uint64_t s, Parity parity);

/// N_s: 6 floor(sqrt(s+1)) - 6 (even) or 6 floor((sqrt(4s+5)-1)/2) - 3 (odd).
std::int64_t n_bound(std::uint64_t s, Parity parity);
/// The same bound from the (k, i) decomposition of s.
std::int64_t n_bound_piecewise(std::uint64_t s, Parity parity);

SetMembership square_or_pronic(std::uint64_t s);
/// s >= 1 and s is k^2 or k(k+1).
bool in_exception_set(std::uint64_t s);

/// Whether the closed forms are proven at (n, s) under the given mode.
/// Relaxed mode (n >= N_s) applies only to s outside the exception set or
/// s in {0, 1, 2}; otherwise it falls back to strict.
bool bound_holds(std::uint64_t n, std::uint64_t s, BoundMode mode = BoundMode::strict);

/// g(t_n, t_{n+1}, t_{n+2}; s) =
///   (n+1)(n+2)/4 * (q n + 6c) - 1            (even n)
///   (n+1)(n+2)/4 * (q n + 6c - 3 delta) - 1  (odd n)
/// Throws bound_error when the bound does not hold at (n, s).
BigInt g_triangular_closed(std::uint64_t n, std::uint64_t s, BoundMode mode = BoundMode::strict);

/// The main formula with no bound check. Exploratory probes only.
BigInt g_triangular_formula(std::uint64_t n, std::uint64_t s);

/// g(t_n, b, c; s) = g(b, c; x_s) + y_s t_n on the reduced triple.
BigInt g_reduced_closed(std::uint64_t n, std::uint64_t s, BoundMode mode = BoundMode::strict);

enum class DifferenceCase { outside_set, even_in_set, odd_square, odd_pronic };
std::string_view to_string(DifferenceCase c);

struct Difference {
  BigInt value;
  DifferenceCase which;
  std::uint64_t k = 0;
};

/// g(...; s+1) - g(...; s), selected by the parity of n and how s+1 sits in
/// the exception set. Requires n > N_{s+1}.
Difference g_difference_closed(std::uint64_t n, std::uint64_t s);

/// Which branch of the three-integer generalization applies to
/// (A1, A2, A3; s). Ratios A2*A3/A1 are compared exactly by
/// cross-multiplication. Throws condition_not_met or undefined_bound.
Parity general_triple_branch(std::uint64_t a1, std::uint64_t a2, std::uint64_t a3,
                             std::uint64_t s);

/// g(A2, A3; x_s) + y_s A1 with the branch's parity pair.
BigInt g_general_triple(std::uint64_t a1, std::uint64_t a2, std::uint64_t a3, std::uint64_t s);

}  // namespace frob
