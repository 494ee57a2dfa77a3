// Acceptance run: one PASS/FAIL line per criterion. Comparisons are exact
// integer or byte equality; each criterion also has a wall-clock limit.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

#include "frobenius/cli.hpp"
#include "frobenius/genfrob.hpp"
#include "frobenius/repcount.hpp"
#include "frobenius/tables.hpp"
#include "frobenius/triangular.hpp"
#include "frobenius/verify.hpp"

using namespace frob;
using namespace frob::verify;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

std::string summarize(const VerificationReport& r) {
  std::ostringstream s;
  s << r.count(CellStatus::pass) << " pass, " << r.count(CellStatus::fail) << " fail, "
    << r.count(CellStatus::cap_exhausted) << " capped, " << r.count(CellStatus::skipped) << " skipped";
  return s.str();
}

std::string first_failure(const VerificationReport& r) {
  for (const auto& c : r.cells())
    if (c.status == CellStatus::fail || c.status == CellStatus::cap_exhausted)
      return "; first: " + std::string(to_string(c.suite)) + " s=" + std::to_string(c.s) +
             " n=" + std::to_string(c.n) + " " + c.label + " expected " + c.expected + " observed " +
             c.observed + (c.note.empty() ? "" : " (" + c.note + ")");
  return "";
}

Outcome from_report(const VerificationReport& r, std::uint64_t min_pass) {
  const bool ok = r.all_passed() && r.count(CellStatus::pass) >= min_pass;
  return {ok, summarize(r) + first_failure(r)};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Outcome tables_criterion() {
  std::string detail;
  bool ok = true;
  for (std::string name : {"qcdelta", "xy", "bounds", "bounds-prev"}) {
    std::ostringstream out, err;
    const int code = cli::run({"tables", "--which", name, "--format", "csv"}, out, err);
    const std::string golden = read_file(default_golden_dir() + "/" + name + ".csv");
    const bool same = code == 0 && !golden.empty() && out.str() == golden;
    ok = ok && same;
    detail += name + (same ? " byte-exact; " : " DIFFERS; ");
  }
  return {ok, detail};
}

Outcome known_constants_criterion() {
  const BigInt a_oracle = g_search(Tuple{7, 11}, 0).value;
  const BigInt a_closed = g_two_var(7, 11, 0);
  const BigInt b_oracle = g_search(Tuple{1, 2}, 0).value;
  const BigInt b_closed = g_two_var(1, 2, 0);
  const bool ok = a_oracle == 59 && a_closed == 59 && b_oracle == -1 && b_closed == -1;
  return {ok, "g(7,11) oracle " + to_string(a_oracle) + " closed " + to_string(a_closed) +
                  "; g(1,2) oracle " + to_string(b_oracle) + " closed " + to_string(b_closed)};
}

GridSpec acceptance_grid() {
  GridSpec spec;
  spec.s_min = 0;
  spec.s_max = 15;
  spec.n_min = 2;
  spec.n_max = 30;
  spec.bound_mode = BoundMode::strict;
  spec.jobs = 1;
  return spec;
}

Outcome corollary_criterion() {
  const auto report = verify_corollary();
  auto line_ok = [&](std::uint64_t s, const std::string& range) {
    for (const auto& c : report.cells())
      if (c.s == s && c.label == "range") return c.expected == range && c.status == CellStatus::pass;
    return false;
  };
  const bool special = line_ok(11, "n = 12 and n >= 14") && line_ok(16, "n = 17 and n >= 19");
  auto out = from_report(report, 22);
  out.ok = out.ok && special;
  out.detail += special ? "; s=11 and s=16 exceptional ranges matched" : "; exceptional ranges NOT matched";
  return out;
}

Outcome remark_criterion() {
  auto samples = generate_remark_samples(24);
  samples.insert(samples.begin(), RemarkSample{20, 4, 11, 3});
  const auto report = verify_remark(samples);
  bool known = false;
  for (const auto& c : report.cells())
    if (c.label == "20,4,11" && c.s == 3) known = c.observed == "73" && c.expected == "73";
  const bool bounded = std::all_of(samples.begin(), samples.end(), [](const auto& r) { return r.a1 <= 60; });
  auto out = from_report(report, 21);
  out.ok = out.ok && known && bounded;
  out.detail += known ? "; (20,4,11;3) = 73" : "; (20,4,11;3) != 73";
  return out;
}

Outcome property_criterion() {
  std::vector<std::string> broken;
  auto require = [&](bool cond, const std::string& name) {
    if (!cond && std::find(broken.begin(), broken.end(), name) == broken.end()) broken.push_back(name);
  };

  const std::vector<Tuple> tuples{Tuple{7, 11}, Tuple{4, 11, 20}, Tuple{3, 6, 10}, Tuple{12, 18, 25, 40},
                                  Tuple{5, 8, 13}, Tuple{49, 50}};
  for (const auto& t : tuples) {
    const auto table = count_prefix(500, t);
    for (auto a : t.elements())
      for (std::uint64_t n = 0; n + a <= 500; ++n) require(table.count(n + a) >= table.count(n), "monotone shift");

    std::vector<std::uint64_t> reversed(t.elements().rbegin(), t.elements().rend());
    require(count_prefix(500, Tuple(reversed)).to_vector() == table.to_vector(), "permutation invariance");

    std::vector<BigInt> series(501, BigInt(0));
    series[0] = 1;
    for (auto a : t.elements()) {
      std::vector<BigInt> product(501, BigInt(0));
      for (std::uint64_t i = 0; i <= 500; ++i)
        for (std::uint64_t e = 0; i + e <= 500; e += a) product[i + e] += series[i];
      series.swap(product);
    }
    require(series == table.to_vector(), "generating-series prefix");
  }

  for (std::uint64_t s = 0; s <= 10000; ++s) {
    const auto [q, c, delta] = closed_params(s);
    const auto ev = xy_pair(s, Parity::even);
    const auto od = xy_pair(s, Parity::odd);
    require(q == 2 * ev.x + ev.y + 3 && c == ev.x && q == od.x + 2 * od.y + 3 &&
                6 * static_cast<std::int64_t>(c) - 3 * static_cast<std::int64_t>(delta) ==
                    3 * static_cast<std::int64_t>(od.x) - 3,
            "cross-link identities");
    for (Parity p : {Parity::even, Parity::odd})
      require(n_bound(s, p) == n_bound_piecewise(s, p), "floor/piecewise N agreement");
  }

  for (std::uint64_t s = 0; s <= 200; ++s) {
    const auto [q, c, delta] = closed_params(s);
    for (std::uint64_t n = 1; n <= 1000; ++n) {
      const std::int64_t factor = static_cast<std::int64_t>(q * n + 6 * c) -
                                  (n % 2 ? 3 * static_cast<std::int64_t>(delta) : 0);
      const BigInt numerator = to_big((n + 1) * (n + 2)) * BigInt(static_cast<long>(factor));
      require(mpz_divisible_ui_p(numerator.get_mpz_t(), 4) != 0, "divisibility by 4");
    }
  }

  GridSpec spec;
  spec.s_max = 10;
  spec.n_max = 24;
  spec.suites = {Suite::main_formula, Suite::reduced_formula, Suite::differences, Suite::remark,
                 Suite::tables, Suite::corollary};
  spec.jobs = 1;
  const std::string serial = to_json(run_suites(spec, default_golden_dir()));
  spec.jobs = 4;
  const std::string parallel = to_json(run_suites(spec, default_golden_dir()));
  require(serial == parallel, "parallel determinism");

  std::string detail = broken.empty() ? "all 8 properties hold" : "broken:";
  for (const auto& b : broken) detail += " " + b + ";";
  return {broken.empty(), detail};
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "table reproduction", 1.0, tables_criterion},
      {2, "known constants", 1.0, known_constants_criterion},
      {3, "main formula vs oracle, s 0..15, n 2..30", 300.0,
       [] { return from_report(verify_main_formula(acceptance_grid()), 1); }},
      {4, "reduced triple and exact count, same grid", 300.0,
       [] { return from_report(verify_reduced_and_exact_count(acceptance_grid()), 2); }},
      {5, "difference identity, s 0..200, n 2..1000", 30.0,
       [] { return from_report(verify_differences(200, 1000), 1); }},
      {6, "two-variable suite, a < b <= 12, s <= 5", 30.0, [] { return from_report(verify_two_var(12, 5), 1); }},
      {7, "gcd reduction suite, 50 triples, s <= 3", 120.0,
       [] {
         const auto triples = beck_kifer_triples(50, 30);
         auto out = from_report(verify_beck_kifer(triples, 3), 200);
         out.ok = out.ok && triples.size() == 50;
         return out;
       }},
      {8, "valid-n lines, s 11..17", 1.0, corollary_criterion},
      {9, "three-integer generalization", 60.0, remark_criterion},
      {10, "property suite", 600.0, property_criterion},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = out.ok && in_time;
    failed += !pass;
    std::printf("%s %2d %s (%.3f s, limit %.0f s%s): %s\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                c.limit_seconds, in_time ? "" : ", TOO SLOW", out.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
