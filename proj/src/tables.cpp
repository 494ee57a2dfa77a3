#include "frobenius/tables.hpp"

#include <functional>
#include <stdexcept>

#include <json.hpp>

#include "frobenius/triangular.hpp"

#ifndef FROB_GOLDEN_DIR
#define FROB_GOLDEN_DIR "data/golden"
#endif

namespace frob::verify {

std::string Table::to_csv() const {
  std::string out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out;
}

std::string Table::to_json() const {
  nlohmann::json doc = {{"name", name}, {"header", header}, {"rows", rows}};
  return doc.dump(2) + "\n";
}

namespace {

template <class F>
std::vector<std::string> row(std::string label, std::uint64_t s_max, F value) {
  std::vector<std::string> out{std::move(label)};
  for (std::uint64_t s = 0; s <= s_max; ++s) out.push_back(std::to_string(value(s)));
  return out;
}

std::vector<std::string> s_header(std::uint64_t s_max) {
  return row("s", s_max, [](std::uint64_t s) { return s; });
}

std::string affine_in_k(std::int64_t slope, std::int64_t intercept) {
  std::string out = (slope == 1 ? "" : std::to_string(slope)) + "k";
  if (intercept > 0) out += "+" + std::to_string(intercept);
  if (intercept < 0) out += std::to_string(intercept);
  return out;
}

// A column covers offsets first(k)..last(k) inside one block of s values.
struct Column {
  std::string heading;
  std::function<std::int64_t(std::int64_t)> first;
  std::function<std::int64_t(std::int64_t)> last;
};

// Fits value(k, offset) = slope*k + intercept on each column, checking
// every offset in the column for k = 2..50.
Table affine_bound_table(std::string name, std::string index_label,
                         const std::vector<Column>& columns,
                         const std::function<std::uint64_t(std::int64_t, std::int64_t)>& s_of) {
  Table t;
  t.name = std::move(name);
  t.header.push_back(std::move(index_label));
  for (const auto& c : columns) t.header.push_back(c.heading);

  for (Parity parity : {Parity::even, Parity::odd}) {
    std::vector<std::string> r{parity == Parity::even ? "N_even" : "N_odd"};
    for (const auto& c : columns) {
      auto at = [&](std::int64_t k) { return n_bound_piecewise(s_of(k, c.first(k)), parity); };
      const std::int64_t slope = at(11) - at(10);
      const std::int64_t intercept = at(10) - 10 * slope;
      for (std::int64_t k = 2; k <= 50; ++k)
        for (std::int64_t off = c.first(k); off <= c.last(k); ++off)
          if (n_bound_piecewise(s_of(k, off), parity) != slope * k + intercept)
            throw std::logic_error("bound is not affine in k on column " + c.heading);
      r.push_back(affine_in_k(slope, intercept));
    }
    t.rows.push_back(std::move(r));
  }
  return t;
}

}  // namespace

Table qcdelta_table(std::uint64_t s_max) {
  Table t{std::string(table_qcdelta), s_header(s_max), {}};
  t.rows.push_back(row("q", s_max, [](auto s) { return closed_params(s).q; }));
  t.rows.push_back(row("c", s_max, [](auto s) { return closed_params(s).c; }));
  t.rows.push_back(row("delta", s_max, [](auto s) { return closed_params(s).delta; }));
  return t;
}

Table xy_table(std::uint64_t s_max) {
  Table t{std::string(table_xy), s_header(s_max), {}};
  t.rows.push_back(row("x_even", s_max, [](auto s) { return xy_pair(s, Parity::even).x; }));
  t.rows.push_back(row("y_even", s_max, [](auto s) { return xy_pair(s, Parity::even).y; }));
  t.rows.push_back(row("x_odd", s_max, [](auto s) { return xy_pair(s, Parity::odd).x; }));
  t.rows.push_back(row("y_odd", s_max, [](auto s) { return xy_pair(s, Parity::odd).y; }));
  return t;
}

Table bounds_table() {
  const std::vector<Column> columns{
      {"0..k-1", [](auto) { return 0; }, [](auto k) { return k - 1; }},
      {"k", [](auto k) { return k; }, [](auto k) { return k; }},
      {"k+1..2k", [](auto k) { return k + 1; }, [](auto k) { return 2 * k; }},
      {"2k+1", [](auto k) { return 2 * k + 1; }, [](auto k) { return 2 * k + 1; }},
  };
  return affine_bound_table(std::string(table_bounds), "i", columns, [](auto k, auto i) {
    return static_cast<std::uint64_t>(k * (k + 1) + i);
  });
}

Table bounds_prev_table() {
  const std::vector<Column> columns{
      {"0..k-2", [](auto) { return 0; }, [](auto k) { return k - 2; }},
      {"k-1", [](auto k) { return k - 1; }, [](auto k) { return k - 1; }},
      {"k..2k-2", [](auto k) { return k; }, [](auto k) { return 2 * k - 2; }},
      {"2k-1", [](auto k) { return 2 * k - 1; }, [](auto k) { return 2 * k - 1; }},
  };
  return affine_bound_table(std::string(table_bounds_prev), "r", columns, [](auto k, auto r) {
    return static_cast<std::uint64_t>((k - 1) * k + r);
  });
}

std::vector<Table> reproduce_tables() {
  return {qcdelta_table(), xy_table(), bounds_table(), bounds_prev_table()};
}

std::optional<Table> table_by_name(std::string_view name, std::optional<std::uint64_t> s_max) {
  if (name == table_qcdelta) return qcdelta_table(s_max.value_or(20));
  if (name == table_xy) return xy_table(s_max.value_or(19));
  if (name == table_bounds) return bounds_table();
  if (name == table_bounds_prev) return bounds_prev_table();
  return std::nullopt;
}

std::string default_golden_dir() { return FROB_GOLDEN_DIR; }

}  // namespace frob::verify
