#include "frobenius/cli.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <cstdlib>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "frobenius/errors.hpp"
#include "frobenius/genfrob.hpp"
#include "frobenius/repcount.hpp"
#include "frobenius/tables.hpp"
#include "frobenius/triangular.hpp"
#include "frobenius/verify.hpp"

namespace frob::cli {

namespace {

using nlohmann::json;

enum class Method { automatic, oracle, closed };
enum class Format { text, json, csv };

struct Options {
  std::string tuple;
  std::uint64_t n = 0;
  std::uint64_t s = 0;
  std::string method_name = "auto";
  std::string bound_name = "strict";
  std::string format_name = "text";
  Method method = Method::automatic;
  BoundMode bound_mode = BoundMode::strict;
  Format format = Format::text;
  std::optional<std::uint64_t> cap;
  unsigned jobs = 1;
  std::string which;
  std::optional<std::uint64_t> s_max;
  std::uint64_t s_min = 0;
  std::uint64_t n_min = 2;
  std::uint64_t n_max = 15;
  std::string suite = "main";
  bool probe = false;
  bool verbose = false;
  std::string golden_dir = verify::default_golden_dir();
};

const std::map<std::string, Method> method_names{
    {"auto", Method::automatic}, {"oracle", Method::oracle}, {"closed", Method::closed}};
const std::map<std::string, BoundMode> bound_names{{"strict", BoundMode::strict},
                                                   {"relaxed", BoundMode::relaxed}};
const std::map<std::string, Format> format_names{
    {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};

std::uint64_t effective_cap(const Options& o) {
  if (o.cap) return *o.cap;
  if (const char* env = std::getenv("FROB_CAP")) {
    const std::string_view text(env);
    std::uint64_t v = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || end != text.data() + text.size() || v == 0)
      throw precondition_error("FROB_CAP must be a positive integer, got '" + std::string(text) + "'");
    return v;
  }
  return default_oracle_cap;
}

void require_format(Format f, std::initializer_list<Format> allowed, std::string_view command) {
  if (std::find(allowed.begin(), allowed.end(), f) == allowed.end())
    throw CLI::ValidationError("--format", "format not supported by " + std::string(command));
}

// n with tuple == (t_n, t_{n+1}, t_{n+2}), if any.
std::optional<std::uint64_t> triangular_index(const Tuple& tuple) {
  if (tuple.size() != 3) return std::nullopt;
  const std::uint64_t n = (isqrt(8 * tuple[0] + 1) - 1) / 2;
  if (n == 0 || n > max_triangular_index || !(triangular_tuple(n) == tuple)) return std::nullopt;
  return n;
}

struct GValue {
  BigInt value;
  std::string method;
};

GValue compute_g(const Tuple& tuple, std::uint64_t s, Method method, std::uint64_t cap) {
  if (method != Method::oracle) {
    if (tuple.size() == 2) return {g_two_var(tuple[0], tuple[1], s), "closed_two_var"};
    if (auto n = triangular_index(tuple); n && bound_holds(*n, s))
      return {g_triangular_closed(*n, s), "triangular_closed"};
    if (method == Method::closed)
      throw precondition_error("no closed form applies to (" + tuple.to_string() + "; s = " +
                               std::to_string(s) + ")");
  }
  return {g_search(tuple, s, cap).value, "oracle_search"};
}

int cmd_count(const Options& o, std::ostream& out) {
  require_format(o.format, {Format::text, Format::json}, "count");
  const Tuple tuple = parse_tuple(o.tuple);
  const BigInt d = count_representations(o.n, tuple, effective_cap(o));
  if (o.format == Format::json)
    out << json{{"tuple", tuple.to_string()}, {"n", o.n}, {"count", to_string(d)}}.dump(2) << '\n';
  else
    out << to_string(d) << '\n';
  return exit_ok;
}

int cmd_g(const Options& o, std::ostream& out) {
  require_format(o.format, {Format::text, Format::json}, "g");
  const Tuple tuple = parse_tuple(o.tuple);
  const GValue g = compute_g(tuple, o.s, o.method, effective_cap(o));
  if (o.format == Format::json)
    out << json{{"tuple", tuple.to_string()}, {"s", o.s}, {"value", to_string(g.value)},
                {"method", g.method}}.dump(2)
        << '\n';
  else
    out << to_string(g.value) << '\n';
  return exit_ok;
}

int cmd_tri(const Options& o, std::ostream& out) {
  require_format(o.format, {Format::text, Format::json}, "tri");
  if (o.bound_mode == BoundMode::relaxed && in_exception_set(o.s))
    throw precondition_error("--bound-mode relaxed is refused for s = " + std::to_string(o.s) +
                             ", a square or pronic number");
  const BigInt value = g_triangular_closed(o.n, o.s, o.bound_mode);
  const auto parity = parity_of(o.n);
  const auto [q, c, delta] = closed_params(o.s);
  const auto xy = xy_pair(o.s, parity);
  const auto bound = n_bound(o.s, parity);
  if (o.format == Format::json) {
    out << json{{"n", o.n},
                {"s", o.s},
                {"value", to_string(value)},
                {"tuple", triangular_tuple(o.n).to_string()},
                {"q", q},
                {"c", c},
                {"delta", delta},
                {"parity", to_string(parity)},
                {"x", xy.x},
                {"y", xy.y},
                {"N", bound},
                {"bound_mode", to_string(o.bound_mode)}}
               .dump(2)
        << '\n';
  } else {
    out << to_string(value) << '\n'
        << "q=" << q << " c=" << c << " delta=" << delta << '\n'
        << "x=" << xy.x << " y=" << xy.y << " (" << to_string(parity) << ")\n"
        << "N_s=" << bound << '\n';
  }
  return exit_ok;
}

int cmd_diff(const Options& o, std::ostream& out) {
  require_format(o.format, {Format::text, Format::json}, "diff");
  const Difference d = g_difference_closed(o.n, o.s);
  if (o.format == Format::json) {
    out << json{{"n", o.n}, {"s", o.s}, {"value", to_string(d.value)},
                {"case", to_string(d.which)}, {"k", d.k}}.dump(2)
        << '\n';
  } else {
    out << to_string(d.value) << '\n' << "case=" << to_string(d.which);
    if (d.which != DifferenceCase::outside_set) out << " k=" << d.k;
    out << '\n';
  }
  return exit_ok;
}

int cmd_tables(const Options& o, std::ostream& out) {
  require_format(o.format, {Format::text, Format::csv, Format::json}, "tables");
  auto table = verify::table_by_name(o.which, o.s_max);
  if (!table) throw precondition_error("unknown table '" + o.which + "'");
  out << (o.format == Format::json ? table->to_json() : table->to_csv());
  return exit_ok;
}

int cmd_verify(const Options& o, std::ostream& out) {
  require_format(o.format, {Format::text, Format::json}, "verify");
  verify::GridSpec spec;
  spec.s_min = o.s_min;
  spec.s_max = o.s_max.value_or(5);
  spec.n_min = o.n_min;
  spec.n_max = o.n_max;
  spec.bound_mode = o.bound_mode;
  spec.probe_small_n = o.probe;
  spec.cap = effective_cap(o);
  spec.jobs = o.jobs;
  spec.suites.clear();
  if (o.suite == "all") {
    for (auto s : {verify::Suite::main_formula, verify::Suite::reduced_formula,
                   verify::Suite::differences, verify::Suite::exact_count, verify::Suite::two_var,
                   verify::Suite::beck_kifer, verify::Suite::remark, verify::Suite::tables,
                   verify::Suite::corollary})
      spec.suites.insert(s);
  } else if (auto suite = verify::parse_suite(o.suite)) {
    spec.suites.insert(*suite);
  } else {
    throw precondition_error("unknown suite '" + o.suite + "'");
  }
  const auto report = verify::run_suites(spec, o.golden_dir);
  out << (o.format == Format::json ? verify::to_json(report)
                                   : verify::to_text(report, !o.verbose));
  return report.all_passed() ? exit_ok : exit_mismatch;
}

template <class T>
CLI::Option* add_choice(CLI::App* app, const std::string& flag, std::string& target,
                        const std::map<std::string, T>& names, const std::string& help) {
  std::vector<std::string> keys;
  for (const auto& entry : names) keys.push_back(entry.first);
  return app->add_option(flag, target, help)->check(CLI::IsMember(keys));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Representation counts and generalized Frobenius numbers", "frob"};
  app.require_subcommand(1);
  Options o;

  auto* count = app.add_subcommand("count", "d(n; A): number of representations of n by A");
  count->add_option("--n", o.n, "Integer to represent")->required();
  count->add_option("--tuple", o.tuple, "Comma-separated positive integers, gcd 1")->required();

  auto* g = app.add_subcommand("g", "g(A; s): largest integer with at most s representations");
  g->add_option("--tuple", o.tuple, "Comma-separated positive integers, gcd 1")->required();
  g->add_option("--s", o.s, "Representation threshold")->required();
  add_choice(g, "--method", o.method_name, method_names, "auto, oracle or closed");

  auto* tri = app.add_subcommand("tri", "Closed form for three consecutive triangular numbers");
  tri->add_option("--n", o.n, "Index of the first triangular number")->required();
  tri->add_option("--s", o.s, "Representation threshold")->required();
  add_choice(tri, "--bound-mode", o.bound_name, bound_names, "strict (n > N_s) or relaxed (n >= N_s)");

  auto* diff = app.add_subcommand("diff", "g(...; s+1) - g(...; s) for triangular triples");
  diff->add_option("--n", o.n, "Index of the first triangular number")->required();
  diff->add_option("--s", o.s, "Representation threshold")->required();

  auto* tables = app.add_subcommand("tables", "Emit a parameter or bound table");
  tables->add_option("--which", o.which, "qcdelta, xy, bounds or bounds-prev")
      ->required()
      ->check(CLI::IsMember({std::string(verify::table_qcdelta), std::string(verify::table_xy),
                             std::string(verify::table_bounds),
                             std::string(verify::table_bounds_prev)}));
  tables->add_option("--s-max", o.s_max, "Largest s column (qcdelta, xy)");

  auto* ver = app.add_subcommand("verify", "Compare closed forms against the oracle");
  ver->add_option("--suite", o.suite,
                  "main, reduced, exact_count, diff, two_var, beck_kifer, tables, corollary, "
                  "remark or all");
  ver->add_option("--s-min", o.s_min, "Smallest s");
  ver->add_option("--s-max", o.s_max, "Largest s");
  ver->add_option("--n-min", o.n_min, "Smallest n");
  ver->add_option("--n-max", o.n_max, "Largest n");
  ver->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_choice(ver, "--bound-mode", o.bound_name, bound_names, "strict or relaxed");
  ver->add_flag("--probe", o.probe, "Also compare the formula below the proven bound");
  ver->add_flag("--verbose", o.verbose, "List every cell, not just failures");
  ver->add_option("--golden-dir", o.golden_dir, "Directory with the golden CSV tables");

  for (auto* sub : {count, g, tri, diff, tables, ver})
    add_choice(sub, "--format", o.format_name, format_names, "text, json or csv");
  for (auto* sub : {count, g, ver})
    sub->add_option("--cap", o.cap, "Oracle cap (overrides FROB_CAP)")->check(CLI::PositiveNumber);

  std::ostringstream result;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    o.method = method_names.at(o.method_name);
    o.bound_mode = bound_names.at(o.bound_name);
    o.format = format_names.at(o.format_name);
    int code = exit_ok;
    if (count->parsed()) code = cmd_count(o, result);
    if (g->parsed()) code = cmd_g(o, result);
    if (tri->parsed()) code = cmd_tri(o, result);
    if (diff->parsed()) code = cmd_diff(o, result);
    if (tables->parsed()) code = cmd_tables(o, result);
    if (ver->parsed()) code = cmd_verify(o, result);
    out << result.str();
    return code;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return exit_usage;
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
}

}  // namespace frob::cli
