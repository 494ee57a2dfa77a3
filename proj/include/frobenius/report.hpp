#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace frob::verify {

enum class Suite {
  main_formula,
  reduced_formula,
  differences,
  exact_count,
  two_var,
  beck_kifer,
  remark,
  tables,
  corollary,
};

std::string_view to_string(Suite suite);
std::optional<Suite> parse_suite(std::string_view name);

enum class CellStatus { pass, fail, skipped, cap_exhausted, probe };
std::string_view to_string(CellStatus status);

/// One comparison. `label` identifies cells that are not indexed by (n, s),
/// e.g. a tuple or a table row; n = 0 when unused.
struct Cell {
  Suite suite = Suite::main_formula;
  std::uint64_t s = 0;
  std::uint64_t n = 0;
  std::string label;
  // Decimal integers for numeric checks; text for pattern checks.
  std::string expected;
  std::string observed;
  CellStatus status = CellStatus::pass;
  std::string note;
};

struct SuiteSummary {
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
  std::uint64_t skipped = 0;
  std::uint64_t cap_exhausted = 0;
  std::uint64_t probe = 0;

  std::uint64_t total() const { return pass + fail + skipped + cap_exhausted + probe; }
  friend bool operator==(const SuiteSummary&, const SuiteSummary&) = default;
};

/// Cells ordered failures first, then by (suite, s, n, label).
class VerificationReport {
 public:
  VerificationReport() = default;
  explicit VerificationReport(std::vector<Cell> cells);

  const std::vector<Cell>& cells() const { return cells_; }
  std::map<Suite, SuiteSummary> summary() const;
  /// No fail or cap_exhausted cells.
  bool all_passed() const;
  std::uint64_t count(CellStatus status) const;

  void merge(const VerificationReport& other);

 private:
  void order();
  std::vector<Cell> cells_;
};

/// Machine form. expected/observed stay strings so exact integers of any
/// size survive a round trip.
std::string to_json(const VerificationReport& report);
/// Human form: per-suite summary followed by an aligned cell listing.
/// With failures_only, passing and skipped cells are omitted.
std::string to_text(const VerificationReport& report, bool failures_only = false);

}  // namespace frob::verify
