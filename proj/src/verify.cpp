#include "frobenius/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "frobenius/errors.hpp"
#include "frobenius/genfrob.hpp"
#include "frobenius/tables.hpp"

namespace frob::verify {

void GridSpec::validate() const {
  if (s_min > s_max) throw precondition_error("grid needs s_min <= s_max");
  if (n_min == 0) throw precondition_error("grid needs n_min >= 1");
  if (n_min > n_max) throw precondition_error("grid needs n_min <= n_max");
  if (cap == 0) throw precondition_error("cap must be >= 1");
  if (jobs == 0) throw precondition_error("jobs must be >= 1");
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(jobs, 1u), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::atomic<bool> failed{false};
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count && !failed; i = next++) {
          try {
            fn(i);
          } catch (...) {
            if (!failed.exchange(true)) first_error = std::current_exception();
          }
        }
      });
    }
  }
  if (first_error) std::rethrow_exception(first_error);
}

namespace {

struct GridPoint {
  std::uint64_t s;
  std::uint64_t n;
};

std::vector<GridPoint> grid_points(std::uint64_t s_min, std::uint64_t s_max, std::uint64_t n_min,
                                   std::uint64_t n_max) {
  std::vector<GridPoint> points;
  for (auto s = s_min; s <= s_max; ++s)
    for (auto n = n_min; n <= n_max; ++n) points.push_back({s, n});
  return points;
}

// Evaluates each point into its own slot, then flattens in point order.
template <class F>
VerificationReport evaluate(std::size_t count, unsigned jobs, F cells_for) {
  std::vector<std::vector<Cell>> slots(count);
  parallel_for(count, jobs, [&](std::size_t i) { slots[i] = cells_for(i); });
  std::vector<Cell> cells;
  for (auto& slot : slots) std::move(slot.begin(), slot.end(), std::back_inserter(cells));
  return VerificationReport(std::move(cells));
}

Cell compare(Cell cell, const BigInt& expected, const BigInt& observed) {
  cell.expected = frob::to_string(expected);
  cell.observed = frob::to_string(observed);
  cell.status = expected == observed ? CellStatus::pass : CellStatus::fail;
  return cell;
}

Cell capped(Cell cell, const std::string& why) {
  cell.status = CellStatus::cap_exhausted;
  cell.note = why;
  return cell;
}

std::string bound_note(std::uint64_t n, std::uint64_t s, BoundMode mode) {
  const auto parity = parity_of(n);
  return std::string(to_string(parity)) + " n not beyond N_s = " +
         std::to_string(n_bound(s, parity)) + " (" + std::string(to_string(mode)) + ")";
}

// Oracle value or the reason it could not be computed.
struct OracleOutcome {
  std::optional<BigInt> value;
  std::string error;
};

OracleOutcome run_oracle(const Tuple& tuple, std::uint64_t s, std::uint64_t cap) {
  try {
    return {g_search(tuple, s, cap).value, {}};
  } catch (const cap_exhausted& e) {
    return {std::nullopt, e.what()};
  } catch (const cap_exceeded& e) {
    return {std::nullopt, e.what()};
  }
}

std::vector<Cell> main_formula_cells(const GridSpec& spec, GridPoint p) {
  const Tuple tuple = triangular_tuple(p.n);
  Cell base{Suite::main_formula, p.s, p.n, tuple.to_string(), {}, {}, CellStatus::pass, {}};

  if (!bound_holds(p.n, p.s, spec.bound_mode)) {
    std::vector<Cell> out;
    Cell skipped = base;
    skipped.status = CellStatus::skipped;
    skipped.note = bound_note(p.n, p.s, spec.bound_mode);
    out.push_back(skipped);
    if (spec.probe_small_n) {
      auto oracle = run_oracle(tuple, p.s, spec.cap);
      if (oracle.value) {
        Cell probe = compare(base, g_triangular_formula(p.n, p.s), *oracle.value);
        probe.note = probe.status == CellStatus::pass ? "formula agrees below bound"
                                                      : "formula differs below bound";
        probe.status = CellStatus::probe;
        out.push_back(probe);
      }
    }
    return out;
  }

  auto oracle = run_oracle(tuple, p.s, spec.cap);
  if (!oracle.value) return {capped(base, oracle.error)};
  return {compare(base, g_triangular_closed(p.n, p.s, spec.bound_mode), *oracle.value)};
}

std::vector<Cell> reduced_cells(const GridSpec& spec, GridPoint p) {
  const ReducedTriple triple = reduced_triple(p.n);
  const Tuple tuple = triple.as_tuple();
  Cell reduced{Suite::reduced_formula, p.s, p.n, tuple.to_string(), {}, {}, CellStatus::pass, {}};
  Cell exact = reduced;
  exact.suite = Suite::exact_count;

  if (!bound_holds(p.n, p.s, spec.bound_mode)) {
    reduced.status = exact.status = CellStatus::skipped;
    reduced.note = exact.note = bound_note(p.n, p.s, spec.bound_mode);
    return {reduced, exact};
  }

  const BigInt closed = g_reduced_closed(p.n, p.s, spec.bound_mode);
  std::vector<Cell> out;
  auto oracle = run_oracle(tuple, p.s, spec.cap);
  out.push_back(oracle.value ? compare(reduced, closed, *oracle.value) : capped(reduced, oracle.error));

  // The closed value has exactly s representations.
  if (sgn(closed) < 0) {
    out.push_back(compare(exact, to_big(p.s), BigInt(0)));
    out.back().note = "negative value has no representations";
  } else {
    try {
      out.push_back(compare(exact, to_big(p.s),
                            count_representations(to_uint64(closed), tuple, spec.cap)));
    } catch (const cap_exceeded& e) {
      out.push_back(capped(exact, e.what()));
    }
  }
  return out;
}

std::string tuple_label(std::initializer_list<std::uint64_t> values) {
  std::string out;
  for (auto v : values) out += (out.empty() ? "" : ",") + std::to_string(v);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::vector<std::string>> split_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace

VerificationReport verify_main_formula(const GridSpec& spec) {
  spec.validate();
  const auto points = grid_points(spec.s_min, spec.s_max, spec.n_min, spec.n_max);
  return evaluate(points.size(), spec.jobs,
                  [&](std::size_t i) { return main_formula_cells(spec, points[i]); });
}

VerificationReport verify_reduced_and_exact_count(const GridSpec& spec) {
  spec.validate();
  const auto points = grid_points(spec.s_min, spec.s_max, spec.n_min, spec.n_max);
  return evaluate(points.size(), spec.jobs,
                  [&](std::size_t i) { return reduced_cells(spec, points[i]); });
}

VerificationReport verify_differences(std::uint64_t s_max, std::uint64_t n_max, unsigned jobs,
                                      std::uint64_t n_min) {
  if (n_min == 0 || n_min > n_max) throw precondition_error("differences need 1 <= n_min <= n_max");
  const auto points = grid_points(0, s_max, n_min, n_max);
  return evaluate(points.size(), jobs, [&](std::size_t i) -> std::vector<Cell> {
    const auto [s, n] = points[i];
    Cell cell{Suite::differences, s, n, {}, {}, {}, CellStatus::pass, {}};
    const auto parity = parity_of(n);
    const auto bound = n_bound(s + 1, parity);
    if (static_cast<std::int64_t>(n) <= bound) {
      cell.status = CellStatus::skipped;
      cell.note = std::string(to_string(parity)) + " n not beyond N_{s+1} = " + std::to_string(bound);
      return {cell};
    }
    const auto predicted = g_difference_closed(n, s);
    const BigInt actual = g_triangular_closed(n, s + 1) - g_triangular_closed(n, s);
    cell = compare(cell, predicted.value, actual);
    cell.note = std::string(to_string(predicted.which));
    return {cell};
  });
}

VerificationReport verify_two_var(std::uint64_t max_element, std::uint64_t s_max,
                                  std::uint64_t cap) {
  std::vector<Cell> cells;
  for (std::uint64_t a = 2; a <= max_element; ++a)
    for (std::uint64_t b = a + 1; b <= max_element; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const Tuple pair{a, b};
      for (std::uint64_t s = 0; s <= s_max; ++s) {
        Cell base{Suite::two_var, s, 0, pair.to_string(), {}, {}, CellStatus::pass, {}};
        const BigInt closed = g_two_var(a, b, s);
        auto oracle = run_oracle(pair, s, cap);
        if (!oracle.value) {
          cells.push_back(capped(base, oracle.error));
          continue;
        }
        Cell g = compare(base, closed, *oracle.value);
        g.note = "g";
        cells.push_back(g);
        Cell d = compare(base, to_big(s), count_representations(to_uint64(closed), pair, cap));
        d.label += " d(g)";
        d.note = "count at g equals s";
        cells.push_back(d);
      }
    }
  return VerificationReport(std::move(cells));
}

std::vector<Tuple> beck_kifer_triples(std::size_t count, std::uint64_t max_element) {
  if (max_element < 4) throw precondition_error("beck_kifer_triples needs max_element >= 4");
  std::mt19937_64 rng(20240611);
  const std::uint64_t span = max_element - 1;
  std::vector<Tuple> out;
  while (out.size() < count) {
    const std::uint64_t a1 = 2 + rng() % span;
    const std::uint64_t a2 = 2 + rng() % span;
    const std::uint64_t a3 = 2 + rng() % span;
    if (std::gcd(a2, a3) < 2 || std::gcd(a1, std::gcd(a2, a3)) != 1) continue;
    Tuple t{a1, a2, a3};
    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(std::move(t));
  }
  return out;
}

VerificationReport verify_beck_kifer(const std::vector<Tuple>& triples, std::uint64_t s_max,
                                     unsigned jobs, std::uint64_t cap) {
  struct Job {
    std::size_t triple;
    std::uint64_t s;
  };
  std::vector<Job> work;
  for (std::size_t i = 0; i < triples.size(); ++i)
    for (std::uint64_t s = 0; s <= s_max; ++s) work.push_back({i, s});

  const auto inner = oracle_solver(cap);
  return evaluate(work.size(), jobs, [&](std::size_t w) -> std::vector<Cell> {
    const Tuple& t = triples[work[w].triple];
    const std::uint64_t s = work[w].s;
    Cell base{Suite::beck_kifer, s, 0, t.to_string(), {}, {}, CellStatus::pass, {}};
    auto direct = run_oracle(t, s, cap);
    if (!direct.value) return {capped(base, direct.error)};
    try {
      Cell c = compare(base, beck_kifer_g(t, s, inner), *direct.value);
      c.note = "ell=" + std::to_string(ReductionStep::of(t).ell);
      return {c};
    } catch (const cap_exhausted& e) {
      return {capped(base, e.what())};
    }
  });
}

VerificationReport verify_tables(const std::string& golden_dir) {
  std::vector<Cell> cells;
  for (const Table& table : reproduce_tables()) {
    const std::string path = golden_dir + "/" + table.name + ".csv";
    const std::string golden = read_file(path);
    const std::string generated = table.to_csv();

    Cell bytes{Suite::tables, 0, 0, table.name + " bytes", {}, {}, CellStatus::pass, {}};
    bytes.expected = std::to_string(golden.size());
    bytes.observed = std::to_string(generated.size());
    bytes.status = golden == generated ? CellStatus::pass : CellStatus::fail;
    if (golden.empty()) bytes.note = "golden file missing or empty: " + path;
    cells.push_back(bytes);

    const auto golden_rows = split_csv(golden);
    const auto generated_rows = split_csv(generated);
    for (std::size_t r = 0; r < generated_rows.size(); ++r) {
      const auto& got = generated_rows[r];
      Cell row{Suite::tables, 0, r, table.name + " " + got.front(), {}, {}, CellStatus::pass, {}};
      const std::vector<std::string> none;
      const auto& want = r < golden_rows.size() ? golden_rows[r] : none;
      std::size_t same = 0;
      for (std::size_t i = 0; i < std::min(want.size(), got.size()); ++i) same += want[i] == got[i];
      row.expected = std::to_string(want.size());
      row.observed = std::to_string(same);
      row.status = want == got ? CellStatus::pass : CellStatus::fail;
      if (row.status == CellStatus::fail) row.note = "entries matching / golden entries";
      cells.push_back(row);
    }
  }
  return VerificationReport(std::move(cells));
}

const std::vector<CorollaryLine>& corollary_lines() {
  static const std::vector<CorollaryLine> lines{
      {11, "8n+12", "8n+12", "n = 12 and n >= 14", "n = 12 and n >= 14"},
      {12, "9n", "9n-3", "even n >= 14", "odd n >= 17"},
      {13, "9n+6", "9n+3", "even n >= 12", "odd n >= 15"},
      {14, "9n+12", "9n+9", "even n >= 12", "odd n >= 15"},
      {15, "9n+18", "9n+15", "even n >= 18", "odd n >= 15"},
      {16, "10n", "10n", "n = 17 and n >= 19", "n = 17 and n >= 19"},
      {17, "10n+6", "10n+6", "n = 15 and n >= 17", "n = 15 and n >= 17"},
  };
  return lines;
}

std::string formula_pattern(std::uint64_t s, Parity parity) {
  const auto [q, c, delta] = closed_params(s);
  auto constant = 6 * static_cast<std::int64_t>(c);
  if (parity == Parity::odd) constant -= 3 * static_cast<std::int64_t>(delta);
  std::string out = std::to_string(q) + "n";
  if (constant > 0) out += "+" + std::to_string(constant);
  if (constant < 0) out += std::to_string(constant);
  return out;
}

std::string describe_range(const std::vector<std::uint64_t>& members, std::uint64_t horizon,
                           std::optional<Parity> parity) {
  auto candidate = [&](std::uint64_t n) { return !parity || parity_of(n) == *parity; };
  auto member = [&](std::uint64_t n) {
    return std::binary_search(members.begin(), members.end(), n);
  };
  // Smallest start such that every candidate in [start, horizon] is a member.
  std::uint64_t start = horizon + 1;
  for (std::uint64_t n = horizon; n >= 1; --n) {
    if (!candidate(n)) continue;
    if (!member(n)) break;
    start = n;
  }
  if (start > horizon) throw std::logic_error("set is not eventually full below the horizon");

  const std::string prefix = parity ? std::string(to_string(*parity)) + " " : std::string();
  std::string out;
  for (auto n : members)
    if (n < start) out += (out.empty() ? "" : ", ") + prefix + "n = " + std::to_string(n);
  if (!out.empty()) out += " and ";
  return out + prefix + "n >= " + std::to_string(start);
}

VerificationReport verify_corollary() {
  constexpr std::uint64_t horizon = 200;
  std::vector<Cell> cells;
  for (const auto& line : corollary_lines()) {
    std::vector<std::uint64_t> even, odd, all;
    for (std::uint64_t n = 1; n <= horizon; ++n) {
      if (!bound_holds(n, line.s, BoundMode::relaxed)) continue;
      (n % 2 == 0 ? even : odd).push_back(n);
      all.push_back(n);
    }
    auto check = [&](std::string label, const std::string& published, const std::string& derived) {
      Cell c{Suite::corollary, line.s, 0, std::move(label), published, derived, CellStatus::pass, {}};
      c.status = published == derived ? CellStatus::pass : CellStatus::fail;
      cells.push_back(std::move(c));
    };

    const std::string even_pattern = formula_pattern(line.s, Parity::even);
    const std::string odd_pattern = formula_pattern(line.s, Parity::odd);
    if (line.even_pattern == line.odd_pattern) {
      check("pattern", line.even_pattern,
            even_pattern == odd_pattern ? even_pattern : even_pattern + " / " + odd_pattern);
      check("range", line.even_range, describe_range(all, horizon));
    } else {
      check("pattern even", line.even_pattern, even_pattern);
      check("pattern odd", line.odd_pattern, odd_pattern);
      check("range even", line.even_range, describe_range(even, horizon, Parity::even));
      check("range odd", line.odd_range, describe_range(odd, horizon, Parity::odd));
    }
  }
  return VerificationReport(std::move(cells));
}

std::vector<RemarkSample> generate_remark_samples(std::size_t count, std::uint64_t a1_max,
                                                  std::uint64_t s_max) {
  std::vector<RemarkSample> all;
  for (std::uint64_t s = 1; s <= s_max; ++s)
    for (std::uint64_t a1 = 2; a1 <= a1_max; ++a1)
      for (std::uint64_t a2 = 2; a2 <= a1; ++a2) {
        if (a1 % a2 != 0) continue;
        for (std::uint64_t a3 = 2; a3 <= a1_max; ++a3) {
          if (std::gcd(a2, a3) != 1) continue;
          try {
            general_triple_branch(a1, a2, a3, s);
            all.push_back({a1, a2, a3, s});
          } catch (const error&) {
          }
        }
      }
  std::vector<RemarkSample> picked;
  if (all.empty() || count == 0) return picked;
  count = std::min(count, all.size());
  for (std::size_t i = 0; i < count; ++i) picked.push_back(all[i * all.size() / count]);
  return picked;
}

VerificationReport verify_remark(const std::vector<RemarkSample>& samples, unsigned jobs,
                                 std::uint64_t cap) {
  return evaluate(samples.size(), jobs, [&](std::size_t i) -> std::vector<Cell> {
    const auto [a1, a2, a3, s] = samples[i];
    Cell base{Suite::remark, s, 0, tuple_label({a1, a2, a3}), {}, {}, CellStatus::pass, {}};
    Parity branch;
    try {
      branch = general_triple_branch(a1, a2, a3, s);
    } catch (const error& e) {
      base.status = CellStatus::skipped;
      base.note = e.what();
      return {base};
    }
    auto oracle = run_oracle(Tuple{a1, a2, a3}, s, cap);
    if (!oracle.value) return {capped(base, oracle.error)};
    Cell c = compare(base, g_general_triple(a1, a2, a3, s), *oracle.value);
    c.note = std::string(to_string(branch)) + " branch";
    return {c};
  });
}

VerificationReport run_suites(const GridSpec& spec, const std::string& golden_dir) {
  spec.validate();
  VerificationReport report;
  const auto& suites = spec.suites;
  if (suites.contains(Suite::main_formula)) report.merge(verify_main_formula(spec));
  if (suites.contains(Suite::reduced_formula) || suites.contains(Suite::exact_count))
    report.merge(verify_reduced_and_exact_count(spec));
  if (suites.contains(Suite::differences))
    report.merge(verify_differences(spec.s_max, spec.n_max, spec.jobs, spec.n_min));
  if (suites.contains(Suite::two_var)) report.merge(verify_two_var(12, 5, spec.cap));
  if (suites.contains(Suite::beck_kifer))
    report.merge(verify_beck_kifer(beck_kifer_triples(), 3, spec.jobs, spec.cap));
  if (suites.contains(Suite::remark)) {
    auto samples = generate_remark_samples(24);
    samples.insert(samples.begin(), RemarkSample{20, 4, 11, 3});
    report.merge(verify_remark(samples, spec.jobs, spec.cap));
  }
  if (suites.contains(Suite::tables)) report.merge(verify_tables(golden_dir));
  if (suites.contains(Suite::corollary)) report.merge(verify_corollary());
  return report;
}

}  // namespace frob::verify
