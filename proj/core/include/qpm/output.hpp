#pragma once

// CSV and JSON renderings of a ResultTable. Numbers are written with 17
// significant digits so a parse of the output recovers every double exactly.

#include <filesystem>
#include <string>
#include <string_view>

#include "qpm/config.hpp"
#include "qpm/scenario.hpp"

namespace qpm {

/// Shortest-exact style rendering at 17 significant digits ("%.17g").
std::string format_double(double value);

/// `# key: value` lines, then `omega_rad_s,re,im`, then one line per row.
std::string to_csv(const ResultTable& table);

/// {"meta": {...}, "rows": [[omega, re, im], ...]}.
std::string to_json(const ResultTable& table);

/// Inverse of to_csv. Throws IoError on malformed input.
ResultTable read_csv(std::string_view text);

/// Inverse of to_json. Throws IoError on malformed input.
ResultTable read_json(std::string_view text);

/// Writes atomically-ish (temp file then rename). Throws IoError naming the path.
void write_output(const ResultTable& table, const std::filesystem::path& path,
                  OutputFormat format);

/// `<dir>/<stem>.<variant>.<ext>`, or the base path unchanged when variant is empty.
std::filesystem::path output_path_for(const std::filesystem::path& base,
                                      const std::string& variant, OutputFormat format);

}  // namespace qpm
