#pragma once

#include <optional>
#include <string_view>

namespace spinlab {

enum class AngleUnit { radians, degrees };

/// Parses "1.5", "-0.3", "pi", "pi/3", "2pi/3", "2*pi/3", "-pi/4", "3/4".
/// Plain numbers are read in `unit`; expressions containing pi are always
/// radians. Returns nullopt for anything malformed or non-finite.
std::optional<double> parse_angle(std::string_view text, AngleUnit unit = AngleUnit::radians);

}  // namespace spinlab
