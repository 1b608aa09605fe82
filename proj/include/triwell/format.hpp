#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace triwell {

/// Shortest decimal that reads back to the same double. Locale independent.
std::string format_shortest(double v);
/// 17 significant digits, for diagnostics.
std::string format_diag(double v);
/// Empty for a missing value.
std::string format_optional(const std::optional<double>& v);

/// Comma-joined row with a trailing '\n'. Fields are written as given.
std::string csv_row(const std::vector<std::string>& fields);

/// Writes to a temporary sibling, then renames over path. On failure the
/// temporary is removed and path is untouched. Throws std::runtime_error.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace triwell
