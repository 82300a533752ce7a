#include "spinlab/angle.hpp"

#include <cstdlib>
#include <cmath>
#include <numbers>
#include <string>

namespace spinlab {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::optional<double> parse_number(std::string_view s) {
  if (s.empty()) return std::nullopt;
  const std::string buf(s);
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

}  // namespace

std::optional<double> parse_angle(std::string_view text, AngleUnit unit) {
  std::string_view s = trim(text);
  if (s.empty()) return std::nullopt;

  double sign = 1.0;
  if (s.front() == '-' || s.front() == '+') {
    if (s.front() == '-') sign = -1.0;
    s.remove_prefix(1);
  }

  std::string_view numer = s;
  std::string_view denom;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    numer = trim(s.substr(0, slash));
    denom = trim(s.substr(slash + 1));
    if (denom.empty()) return std::nullopt;
  }

  bool has_pi = false;
  if (const auto pi = numer.find("pi"); pi != std::string_view::npos) {
    if (pi + 2 != numer.size()) return std::nullopt;
    has_pi = true;
    numer = trim(numer.substr(0, pi));
    if (!numer.empty() && numer.back() == '*') numer = trim(numer.substr(0, numer.size() - 1));
  }

  double value = 1.0;
  if (!numer.empty()) {
    const auto n = parse_number(numer);
    if (!n || (numer.front() == '-' || numer.front() == '+')) return std::nullopt;
    value = *n;
  } else if (!has_pi) {
    return std::nullopt;
  }
  if (!denom.empty()) {
    const auto d = parse_number(denom);
    if (!d || *d == 0.0) return std::nullopt;
    value /= *d;
  }
  value *= sign;
  if (has_pi) return value * std::numbers::pi;
  return unit == AngleUnit::degrees ? value * std::numbers::pi / 180.0 : value;
}

}  // namespace spinlab
