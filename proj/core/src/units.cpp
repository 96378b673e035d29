#include "qpm/units.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "qpm/errors.hpp"

namespace qpm {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

double parse_frequency(std::string_view text) {
  const std::string_view body = trim(text);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
  if (ec != std::errc{} || end == body.data()) {
    throw DomainError("not a frequency: '" + std::string(text) + "'");
  }
  const std::string_view unit = trim(std::string_view(end, body.data() + body.size() - end));
  if (unit.empty() || unit == "rad/s") return value;
  if (unit == "THz") return thz_to_rad_per_s(value);
  throw DomainError("unknown frequency unit '" + std::string(unit) +
                    "' (expected rad/s or THz): '" + std::string(text) + "'");
}

}  // namespace qpm
