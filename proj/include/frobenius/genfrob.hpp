#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "frobenius/bigint.hpp"
#include "frobenius/repcount.hpp"

namespace frob {

enum class GFrobMethod { closed_two_var, oracle_search, beck_kifer };

std::string_view to_string(GFrobMethod m);

struct WindowEntry {
  std::uint64_t n;
  BigInt count;
};

/// g(A; s): the largest integer with at most s representations, or -1 when
/// every non-negative integer has more than s.
struct GFrobResult {
  BigInt value;
  std::uint64_t s = 0;
  GFrobMethod method = GFrobMethod::oracle_search;
  /// min(A) consecutive integers directly above value, each with count >= s+1.
  std::optional<std::vector<WindowEntry>> witness_window;
};

/// (s+1)ab - a - b. Rejects non-coprime pairs.
BigInt g_two_var(std::uint64_t a, std::uint64_t b, std::uint64_t s);

/// Brute-force oracle. Scans d(n; A) upward and stops at the first run of
/// min(A) consecutive integers that all have at least s+1 representations:
/// adding an element of A to n never lowers its count, so nothing above the
/// run can drop back to s or fewer. Throws cap_exhausted if the run does not
/// appear at or below cap.
GFrobResult g_search(const Tuple& tuple, std::uint64_t s,
                     std::uint64_t cap = default_oracle_cap);

/// gcd reduction on the trailing elements: with ell = gcd(a_2..a_k),
/// g(a_1, a_2..a_k; s) = ell * g(a_1, a_2/ell..a_k/ell; s) + a_1 (ell - 1).
struct ReductionStep {
  std::uint64_t ell;
  Tuple reduced;
  std::uint64_t first;

  static ReductionStep of(const Tuple& tuple);
  BigInt lift(const BigInt& reduced_value) const;
};

using InnerSolver = std::function<BigInt(const Tuple&, std::uint64_t)>;

/// Inner solver backed by g_search.
InnerSolver oracle_solver(std::uint64_t cap = default_oracle_cap);

BigInt beck_kifer_g(const Tuple& tuple, std::uint64_t s, const InnerSolver& inner);

/// The unique i >= 0 with g(a,b;i-1) < g(a,b;s) + j*c <= g(a,b;i), taking
/// g(a,b;-1) = -infinity. For c a multiple of a or b this equals
/// d(g(a,b;s) + j*c; a, b). Pure arithmetic, valid beyond the oracle cap.
BigInt classify_shifted(std::uint64_t a, std::uint64_t b, std::uint64_t s, std::uint64_t c,
                        std::int64_t j);

}  // namespace frob
