#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace frob::verify {

/// A small labelled grid: one header row, then data rows. The first column
/// of each row is its label.
struct Table {
  std::string name;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string to_csv() const;
  std::string to_json() const;
};

/// Table name -> file stem in the golden directory.
inline constexpr std::string_view table_qcdelta = "qcdelta";
inline constexpr std::string_view table_xy = "xy";
inline constexpr std::string_view table_bounds = "bounds";
inline constexpr std::string_view table_bounds_prev = "bounds-prev";

/// q_s, c_s, delta_s for s = 0..s_max.
Table qcdelta_table(std::uint64_t s_max = 20);
/// x/y pairs for both parities, s = 0..s_max.
Table xy_table(std::uint64_t s_max = 19);
/// N_s^even / N_s^odd as affine expressions in k over the ranges of i,
/// for s = k(k+1) + i. Derived from the piecewise bound by evaluation.
Table bounds_table();
/// Same for v = (k-1)k + r, the previous block of s.
Table bounds_prev_table();

/// All four, at their default sizes.
std::vector<Table> reproduce_tables();

std::optional<Table> table_by_name(std::string_view name, std::optional<std::uint64_t> s_max = {});

/// Directory holding the committed golden CSV files.
std::string default_golden_dir();

}  // namespace frob::verify
