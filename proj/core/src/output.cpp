#include "qpm/output.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <system_error>

#include "qpm/errors.hpp"

namespace qpm {

namespace {

constexpr std::string_view kHeader = "omega_rad_s,re,im";

double parse_double(std::string_view s, std::size_t line) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw IoError("csv line " + std::to_string(line) + ": bad number '" + std::string(s) + "'");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string format_double(double value) {
  char buf[40];
  const auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

std::string to_csv(const ResultTable& table) {
  std::string out;
  for (const auto& [key, value] : table.meta) out += "# " + key + ": " + value + "\n";
  out += kHeader;
  out += '\n';
  for (const auto& row : table.rows) {
    out += format_double(row[0]) + ',' + format_double(row[1]) + ',' + format_double(row[2]) + '\n';
  }
  return out;
}

std::string to_json(const ResultTable& table) {
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  for (const auto& [key, value] : table.meta) meta[key] = value;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) rows.push_back({row[0], row[1], row[2]});
  nlohmann::ordered_json doc;
  doc["meta"] = std::move(meta);
  doc["rows"] = std::move(rows);
  return doc.dump(1) + "\n";
}

ResultTable read_csv(std::string_view text) {
  ResultTable table;
  bool header_seen = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (header_seen) throw IoError("csv line " + std::to_string(line_no) + ": metadata after header");
      line = trim(line.substr(1));
      const std::size_t colon = line.find(':');
      if (colon == std::string_view::npos) {
        throw IoError("csv line " + std::to_string(line_no) + ": metadata without ':'");
      }
      table.meta.emplace_back(std::string(trim(line.substr(0, colon))),
                              std::string(trim(line.substr(colon + 1))));
      continue;
    }
    if (!header_seen) {
      if (line != kHeader) throw IoError("csv: expected header '" + std::string(kHeader) + "'");
      header_seen = true;
      continue;
    }
    const std::size_t c1 = line.find(',');
    const std::size_t c2 = c1 == std::string_view::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string_view::npos || line.find(',', c2 + 1) != std::string_view::npos) {
      throw IoError("csv line " + std::to_string(line_no) + ": expected 3 columns");
    }
    table.rows.push_back({parse_double(line.substr(0, c1), line_no),
                          parse_double(line.substr(c1 + 1, c2 - c1 - 1), line_no),
                          parse_double(line.substr(c2 + 1), line_no)});
  }
  if (!header_seen) throw IoError("csv: missing header");
  return table;
}

ResultTable read_json(std::string_view text) {
  ResultTable table;
  try {
    const nlohmann::ordered_json doc = nlohmann::ordered_json::parse(text);
    for (const auto& [key, value] : doc.at("meta").items()) {
      table.meta.emplace_back(key, value.get<std::string>());
    }
    for (const auto& row : doc.at("rows")) {
      if (row.size() != 3) throw IoError("json: each row needs 3 numbers");
      table.rows.push_back({row[0].get<double>(), row[1].get<double>(), row[2].get<double>()});
    }
  } catch (const nlohmann::json::exception& err) {
    throw IoError(std::string("json: ") + err.what());
  }
  return table;
}

void write_output(const ResultTable& table, const std::filesystem::path& path,
                  OutputFormat format) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (path.has_parent_path()) {
    fs::create_directories(path.parent_path(), ec);
    if (ec) {
      throw IoError("cannot create directory '" + path.parent_path().string() +
                    "': " + ec.message());
    }
  }
  const std::string body = format == OutputFormat::kCsv ? to_csv(table) : to_json(table);
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
    out << body;
    out.flush();
    if (!out) throw IoError("write to '" + tmp.string() + "' failed");
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot move output into place at '" + path.string() + "'");
  }
}

std::filesystem::path output_path_for(const std::filesystem::path& base,
                                      const std::string& variant, OutputFormat format) {
  if (variant.empty()) return base;
  std::filesystem::path out = base;
  const std::string ext = format == OutputFormat::kCsv ? ".csv" : ".json";
  const std::string stem = base.has_extension() ? base.stem().string() : base.filename().string();
  out.replace_filename(stem + "." + variant + ext);
  return out;
}

}  // namespace qpm
