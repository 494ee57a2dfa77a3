#pragma once

// Grid comparisons of every closed form against the brute-force oracle.
//
// The oracle path (count_prefix + g_search) never calls into the closed-form
// code, so a bug on one side cannot hide a mismatch on the other. Cells are
// evaluated independently, possibly in parallel, and merged in a fixed
// order: identical inputs give byte-identical reports for any job count.

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "frobenius/repcount.hpp"
#include "frobenius/report.hpp"
#include "frobenius/triangular.hpp"

namespace frob::verify {

struct GridSpec {
  std::uint64_t s_min = 0;
  std::uint64_t s_max = 5;
  std::uint64_t n_min = 2;
  std::uint64_t n_max = 15;
  BoundMode bound_mode = BoundMode::strict;
  std::set<Suite> suites{Suite::main_formula};
  /// Also evaluate the formula below the proven bound and record how it
  /// compares with the oracle. Probe cells never count as failures.
  bool probe_small_n = false;
  std::uint64_t cap = default_oracle_cap;
  unsigned jobs = 1;

  /// Throws precondition_error on s_min > s_max, n_min > n_max, n_min == 0,
  /// cap == 0 or jobs == 0.
  void validate() const;
};

/// Runs fn(0..count-1) on up to `jobs` threads.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn);

/// g_search on (t_n, t_{n+1}, t_{n+2}) against g_triangular_closed.
VerificationReport verify_main_formula(const GridSpec& spec);

/// g_search on the reduced triple against g_reduced_closed, plus the exact
/// count d(g_reduced_closed(n,s); reduced triple) == s.
VerificationReport verify_reduced_and_exact_count(const GridSpec& spec);

/// g_difference_closed(n,s) against the difference of two main-formula values,
/// for n_min <= n <= n_max and s <= s_max. Pure arithmetic.
VerificationReport verify_differences(std::uint64_t s_max, std::uint64_t n_max,
                                      unsigned jobs = 1, std::uint64_t n_min = 2);

/// Coprime 2 <= a < b <= max_element, s <= s_max: oracle against
/// (s+1)ab - a - b, and d(g; a, b) == s.
VerificationReport verify_two_var(std::uint64_t max_element = 12, std::uint64_t s_max = 5,
                                  std::uint64_t cap = default_oracle_cap);

/// Fixed, reproducible triples with elements in [2, max_element], overall
/// gcd 1 and gcd of the last two elements > 1.
std::vector<Tuple> beck_kifer_triples(std::size_t count = 50, std::uint64_t max_element = 30);

/// beck_kifer_g wrapped around the oracle against the direct oracle.
VerificationReport verify_beck_kifer(const std::vector<Tuple>& triples, std::uint64_t s_max = 3,
                                     unsigned jobs = 1, std::uint64_t cap = default_oracle_cap);

/// Generated tables against the golden CSV files, row by row and byte-exact.
VerificationReport verify_tables(const std::string& golden_dir);

/// Published pattern and valid-n range for one s in 11..17. Patterns read
/// "an+b" for (n+1)(n+2)/4 * (an+b) - 1. When the line gives a single
/// pattern for all n, both parities carry the same pattern and range.
struct CorollaryLine {
  std::uint64_t s;
  std::string even_pattern;
  std::string odd_pattern;
  std::string even_range;
  std::string odd_range;
};

const std::vector<CorollaryLine>& corollary_lines();

/// "qn+b" for the main formula at s and the given parity.
std::string formula_pattern(std::uint64_t s, Parity parity);

/// Canonical text for a set of n in [1, horizon] that is full from some
/// point on: "n >= 14", "n = 12 and n >= 14", or with a parity
/// "even n >= 14". With a parity, only n of that parity are candidates.
std::string describe_range(const std::vector<std::uint64_t>& members, std::uint64_t horizon,
                           std::optional<Parity> parity = std::nullopt);

/// Derived coefficient patterns and admissible-n sets against corollary_lines().
VerificationReport verify_corollary();

struct RemarkSample {
  std::uint64_t a1;
  std::uint64_t a2;
  std::uint64_t a3;
  std::uint64_t s;
};

/// Evenly spaced picks from all (A1, A2, A3, s) with A1, A3 <= a1_max,
/// 1 <= s <= s_max that satisfy one of the ratio branches. Deterministic.
std::vector<RemarkSample> generate_remark_samples(std::size_t count, std::uint64_t a1_max = 60,
                                                  std::uint64_t s_max = 8);

/// g_general_triple against the oracle; samples outside both branches are
/// recorded as skipped with the reason.
VerificationReport verify_remark(const std::vector<RemarkSample>& samples, unsigned jobs = 1,
                                 std::uint64_t cap = default_oracle_cap);

/// Every suite in spec.suites. Grid suites use spec's ranges; the others
/// run at their default sizes.
VerificationReport run_suites(const GridSpec& spec, const std::string& golden_dir);

}  // namespace frob::verify
