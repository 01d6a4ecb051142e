#include "cli/units.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "cli/config.hpp"

namespace lensattack::cli {

namespace {

struct Unit {
  std::string_view suffix;
  double per_meter;
};

// Longest suffix first so "mm" is not read as "m". Dividing keeps "26mm"
// identical to "0.026m".
constexpr Unit kUnits[] = {{"mm", 1000.0}, {"cm", 100.0}, {"m", 1.0}};

}  // namespace

double parse_length(std::string_view text) {
  const std::string quoted = "'" + std::string(text) + "'";
  for (const Unit& unit : kUnits) {
    if (text.size() <= unit.suffix.size() || !text.ends_with(unit.suffix)) continue;
    const std::string_view number = text.substr(0, text.size() - unit.suffix.size());
    double value = 0.0;
    const auto [end, ec] = std::from_chars(number.data(), number.data() + number.size(), value);
    if (ec != std::errc() || end != number.data() + number.size()) break;
    if (!std::isfinite(value)) throw ConfigError("", "length " + quoted + " is not finite");
    return value / unit.per_meter;
  }
  double ignored = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), ignored);
  if (ec == std::errc() && end == text.data() + text.size()) {
    throw ConfigError("", "length " + quoted + " needs a unit suffix (m, cm or mm)");
  }
  throw ConfigError("", "cannot parse length " + quoted);
}

std::optional<double> parse_focal_length(std::string_view text) {
  if (text == "none") return std::nullopt;
  return parse_length(text);
}

std::string format_length(double meters) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17gm", meters);
  return buf;
}

}  // namespace lensattack::cli
