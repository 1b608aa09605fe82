#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace triwell {

/// One published row. Blank cells stay empty; the values are kept exactly
/// as loaded, including rows whose energies break the expected ordering.
struct Table1Row {
  double vbar0 = 0.0;
  std::optional<double> e0, e1, e2;
  std::string text;                // the raw CSV line, for reporting verbatim
  std::array<std::string, 4> cells;  // raw cell text, same order as the columns

  std::optional<double> energy(int n) const;
  int count() const;
};

/// FNV-1a 64 of the shipped data/table1.csv.
inline constexpr std::uint64_t kTable1Hash = 0x72c51b5545b5cdbaULL;
inline constexpr std::size_t kTable1Rows = 24;

std::uint64_t fnv1a64(std::string_view bytes);

/// Directory holding table1.csv unless overridden: TRIWELL_DATA_DIR from
/// the environment, else the compiled-in source data directory.
std::filesystem::path default_data_dir();

/// Parses `vbar0,e0,e1,e2` with a header row. Throws std::runtime_error on
/// malformed input.
std::vector<Table1Row> parse_table1(std::string_view csv);

/// Loads the file and checks its hash against kTable1Hash when verify is
/// set. Throws std::runtime_error on a missing or modified file.
std::vector<Table1Row> load_table1(const std::filesystem::path& path, bool verify = true);

/// Published onset depths of the first and second excited states.
inline constexpr double kPaperOnset1 = 4.28;
inline constexpr double kPaperOnset2 = 20.62;

}  // namespace triwell
