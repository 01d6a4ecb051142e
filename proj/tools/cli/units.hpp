#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace lensattack::cli {

// "-20cm", "0.2m", "26mm" -> meters. A bare number has no unit and is
// rejected, as is anything non-finite. Throws ConfigError.
double parse_length(std::string_view text);

// parse_length, plus "none" (no attack lens) -> nullopt.
std::optional<double> parse_focal_length(std::string_view text);

// Lossless textual form in meters, e.g. "-0.2m".
std::string format_length(double meters);

}  // namespace lensattack::cli
