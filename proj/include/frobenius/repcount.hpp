#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "frobenius/bigint.hpp"

namespace frob {

/// Default oracle cap: largest counting argument (and DP table length - 1)
/// the brute-force path will accept.
inline constexpr std::uint64_t default_oracle_cap = 100'000'000;

/// Ordered tuple of positive integers. Elements are kept as given:
/// (3,6,10) and (3,10) are different tuples.
class Tuple {
 public:
  /// Requires at least two elements, each >= 1, with overall gcd 1.
  explicit Tuple(std::vector<std::uint64_t> elements);
  Tuple(std::initializer_list<std::uint64_t> elements)
      : Tuple(std::vector<std::uint64_t>(elements)) {}

  /// Skips the gcd and length checks; the caller asserts coprimality.
  /// Elements must still be positive.
  static Tuple unchecked(std::vector<std::uint64_t> elements);

  std::span<const std::uint64_t> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::uint64_t operator[](std::size_t i) const { return elements_[i]; }
  std::uint64_t min_element() const;
  std::uint64_t max_element() const;

  /// "a,b,c"
  std::string to_string() const;

  friend bool operator==(const Tuple&, const Tuple&) = default;

 private:
  struct no_check {};
  Tuple(std::vector<std::uint64_t> elements, no_check);

  std::vector<std::uint64_t> elements_;
};

/// Parses "a,b,c" into a checked tuple.
Tuple parse_tuple(const std::string& text);

/// counts[n] = d(n; A) for 0 <= n <= limit. Immutable once built.
///
/// Counts are held in machine words while they fit; if any partial sum
/// overflows during construction the whole table is rebuilt with exact
/// big integers.
class CountTable {
 public:
  const Tuple& tuple() const { return tuple_; }
  std::uint64_t limit() const { return limit_; }
  bool is_wide() const { return !wide_.empty(); }

  BigInt count(std::uint64_t n) const;

  /// count(n) >= threshold, without materializing a big integer.
  bool at_least(std::uint64_t n, std::uint64_t threshold) const;

  /// Counts as big integers, index = n.
  std::vector<BigInt> to_vector() const;

 private:
  friend CountTable count_prefix(std::uint64_t, const Tuple&, std::uint64_t);
  CountTable(Tuple tuple, std::uint64_t limit) : tuple_(std::move(tuple)), limit_(limit) {}

  Tuple tuple_;
  std::uint64_t limit_;
  std::vector<std::uint64_t> narrow_;
  std::vector<BigInt> wide_;
};

/// One unbounded-knapsack pass: for each element a, in ascending n,
/// counts[n] += counts[n - a]. O(k * limit) time, O(limit) space.
/// Throws cap_exceeded when limit > cap.
CountTable count_prefix(std::uint64_t limit, const Tuple& tuple,
                        std::uint64_t cap = default_oracle_cap);

/// Number of non-negative solutions of sum a_j x_j = n.
BigInt count_representations(std::uint64_t n, const Tuple& tuple,
                             std::uint64_t cap = default_oracle_cap);

/// d(m; t_n, t_{n+1}/d1, t_{n+2}/d1) summed over multiples of t_n, with each
/// two-variable term counted by direct enumeration. Shares no code with the
/// knapsack DP.
BigInt count_by_decomposition(std::uint64_t m, std::uint64_t n,
                              std::uint64_t cap = default_oracle_cap);

}  // namespace frob
