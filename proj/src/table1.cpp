#include "triwell/table1.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace triwell {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::optional<double> parse_cell(std::string_view cell, std::size_t line) {
  cell = trim(cell);
  if (cell.empty()) return std::nullopt;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc() || ptr != cell.data() + cell.size()) {
    throw std::runtime_error("table1: bad number '" + std::string(cell) + "' on line " +
                             std::to_string(line));
  }
  return v;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

}  // namespace

std::optional<double> Table1Row::energy(int n) const {
  switch (n) {
    case 0: return e0;
    case 1: return e1;
    case 2: return e2;
    default: return std::nullopt;
  }
}

int Table1Row::count() const { return int(e0.has_value()) + int(e1.has_value()) + int(e2.has_value()); }

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("TRIWELL_DATA_DIR"); env && *env) return env;
  return TRIWELL_DATA_DIR;
}

std::vector<Table1Row> parse_table1(std::string_view csv) {
  std::vector<Table1Row> rows;
  std::size_t line_no = 0;
  bool header = true;
  while (!csv.empty()) {
    const std::size_t nl = csv.find('\n');
    std::string_view line = csv.substr(0, nl);
    csv = (nl == std::string_view::npos) ? std::string_view{} : csv.substr(nl + 1);
    ++line_no;
    if (trim(line).empty()) continue;
    if (header) {
      if (trim(line) != "vbar0,e0,e1,e2") {
        throw std::runtime_error("table1: expected header 'vbar0,e0,e1,e2'");
      }
      header = false;
      continue;
    }
    const auto cells = split(line);
    if (cells.size() != 4) {
      throw std::runtime_error("table1: line " + std::to_string(line_no) + " has " +
                               std::to_string(cells.size()) + " fields, expected 4");
    }
    Table1Row row;
    const auto v = parse_cell(cells[0], line_no);
    if (!v || !(*v > 0.0)) {
      throw std::runtime_error("table1: line " + std::to_string(line_no) + " needs vbar0 > 0");
    }
    row.vbar0 = *v;
    row.e0 = parse_cell(cells[1], line_no);
    row.e1 = parse_cell(cells[2], line_no);
    row.e2 = parse_cell(cells[3], line_no);
    row.text = std::string(trim(line));
    for (std::size_t c = 0; c < 4; ++c) row.cells[c] = std::string(trim(cells[c]));
    rows.push_back(std::move(row));
  }
  if (header) throw std::runtime_error("table1: empty file");
  return rows;
}

std::vector<Table1Row> load_table1(const std::filesystem::path& path, bool verify) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("table1: cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string bytes = buf.str();
  if (verify && fnv1a64(bytes) != kTable1Hash) {
    throw std::runtime_error("table1: " + path.string() +
                             " does not match the shipped dataset (hash mismatch)");
  }
  return parse_table1(bytes);
}

}  // namespace triwell
