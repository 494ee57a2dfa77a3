#include "frobenius/report.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <sstream>
#include <tuple>

#include <json.hpp>

namespace frob::verify {

namespace {

constexpr std::array suite_names{
    std::pair{Suite::main_formula, "main"},     std::pair{Suite::reduced_formula, "reduced"},
    std::pair{Suite::differences, "diff"},      std::pair{Suite::exact_count, "exact_count"},
    std::pair{Suite::two_var, "two_var"},       std::pair{Suite::beck_kifer, "beck_kifer"},
    std::pair{Suite::remark, "remark"},         std::pair{Suite::tables, "tables"},
    std::pair{Suite::corollary, "corollary"},
};

bool is_failure(CellStatus s) { return s == CellStatus::fail || s == CellStatus::cap_exhausted; }

}  // namespace

std::string_view to_string(Suite suite) {
  for (auto [s, name] : suite_names)
    if (s == suite) return name;
  return "unknown";
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (auto [s, n] : suite_names)
    if (name == n) return s;
  return std::nullopt;
}

std::string_view to_string(CellStatus status) {
  switch (status) {
    case CellStatus::pass: return "pass";
    case CellStatus::fail: return "fail";
    case CellStatus::skipped: return "skipped";
    case CellStatus::cap_exhausted: return "cap_exhausted";
    case CellStatus::probe: return "probe";
  }
  return "unknown";
}

VerificationReport::VerificationReport(std::vector<Cell> cells) : cells_(std::move(cells)) {
  order();
}

void VerificationReport::order() {
  std::stable_sort(cells_.begin(), cells_.end(), [](const Cell& a, const Cell& b) {
    return std::tuple(!is_failure(a.status), a.suite, a.s, a.n, a.label,
                      static_cast<int>(a.status)) <
           std::tuple(!is_failure(b.status), b.suite, b.s, b.n, b.label,
                      static_cast<int>(b.status));
  });
}

void VerificationReport::merge(const VerificationReport& other) {
  cells_.insert(cells_.end(), other.cells_.begin(), other.cells_.end());
  order();
}

std::map<Suite, SuiteSummary> VerificationReport::summary() const {
  std::map<Suite, SuiteSummary> out;
  for (const auto& c : cells_) {
    auto& s = out[c.suite];
    switch (c.status) {
      case CellStatus::pass: ++s.pass; break;
      case CellStatus::fail: ++s.fail; break;
      case CellStatus::skipped: ++s.skipped; break;
      case CellStatus::cap_exhausted: ++s.cap_exhausted; break;
      case CellStatus::probe: ++s.probe; break;
    }
  }
  return out;
}

bool VerificationReport::all_passed() const {
  return std::none_of(cells_.begin(), cells_.end(), [](const Cell& c) { return is_failure(c.status); });
}

std::uint64_t VerificationReport::count(CellStatus status) const {
  return static_cast<std::uint64_t>(
      std::count_if(cells_.begin(), cells_.end(), [status](const Cell& c) { return c.status == status; }));
}

std::string to_json(const VerificationReport& report) {
  using nlohmann::json;
  json summary = json::object();
  for (const auto& [suite, s] : report.summary()) {
    summary[std::string(to_string(suite))] = {{"pass", s.pass},
                                              {"fail", s.fail},
                                              {"skipped", s.skipped},
                                              {"cap_exhausted", s.cap_exhausted},
                                              {"probe", s.probe},
                                              {"total", s.total()}};
  }
  json cells = json::array();
  for (const auto& c : report.cells()) {
    cells.push_back({{"suite", to_string(c.suite)},
                     {"s", c.s},
                     {"n", c.n},
                     {"label", c.label},
                     {"expected", c.expected},
                     {"observed", c.observed},
                     {"status", to_string(c.status)},
                     {"note", c.note}});
  }
  json doc = {{"all_passed", report.all_passed()}, {"summary", summary}, {"cells", cells}};
  return doc.dump(2) + "\n";
}

std::string to_text(const VerificationReport& report, bool failures_only) {
  std::ostringstream out;
  out << std::left << std::setw(12) << "suite" << std::right << std::setw(9) << "pass"
      << std::setw(9) << "fail" << std::setw(9) << "skipped" << std::setw(9) << "capped"
      << std::setw(9) << "probe" << '\n';
  for (const auto& [suite, s] : report.summary()) {
    out << std::left << std::setw(12) << to_string(suite) << std::right << std::setw(9) << s.pass
        << std::setw(9) << s.fail << std::setw(9) << s.skipped << std::setw(9) << s.cap_exhausted
        << std::setw(9) << s.probe << '\n';
  }
  out << (report.all_passed() ? "ALL PASS" : "FAILURES PRESENT") << "\n\n";

  std::vector<const Cell*> shown;
  for (const auto& c : report.cells())
    if (!failures_only || is_failure(c.status)) shown.push_back(&c);
  if (shown.empty()) return out.str();

  std::size_t label_w = 5, exp_w = 8, obs_w = 8;
  for (const Cell* c : shown) {
    label_w = std::max(label_w, c->label.size());
    exp_w = std::max(exp_w, c->expected.size());
    obs_w = std::max(obs_w, c->observed.size());
  }
  out << std::left << std::setw(12) << "suite" << std::setw(14) << "status" << std::right
      << std::setw(6) << "s" << std::setw(7) << "n" << "  " << std::left
      << std::setw(static_cast<int>(label_w)) << "label" << std::right << "  "
      << std::setw(static_cast<int>(exp_w)) << "expected" << "  "
      << std::setw(static_cast<int>(obs_w)) << "observed" << "  note\n";
  for (const Cell* c : shown) {
    out << std::left << std::setw(12) << to_string(c->suite) << std::setw(14)
        << to_string(c->status) << std::right << std::setw(6) << c->s << std::setw(7) << c->n
        << "  " << std::left << std::setw(static_cast<int>(label_w)) << c->label << std::right
        << "  " << std::setw(static_cast<int>(exp_w)) << c->expected << "  "
        << std::setw(static_cast<int>(obs_w)) << c->observed;
    if (!c->note.empty()) out << "  " << c->note;
    out << '\n';
  }
  return out.str();
}

}  // namespace frob::verify
