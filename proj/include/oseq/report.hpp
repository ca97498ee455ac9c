#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oseq/error.hpp"

namespace oseq {

enum class Property {
  LogConcave,
  Unimodal,
  Flawless,
  DifferentiableFirstHalf,
  OSequence,
};

inline constexpr Property kAllProperties[] = {
    Property::OSequence, Property::LogConcave, Property::Unimodal, Property::Flawless,
    Property::DifferentiableFirstHalf};

inline std::string_view to_string(Property p) {
  switch (p) {
    case Property::LogConcave: return "LOG_CONCAVE";
    case Property::Unimodal: return "UNIMODAL";
    case Property::Flawless: return "FLAWLESS";
    case Property::DifferentiableFirstHalf: return "DIFFERENTIABLE_FIRST_HALF";
    case Property::OSequence: return "O_SEQUENCE";
  }
  return "UNKNOWN";
}

/// Accepts both the enum spelling ("LOG_CONCAVE") and the CLI spelling
/// ("log-concave"). "differentiable" is a CLI shorthand.
inline std::optional<Property> parse_property(std::string_view name) {
  std::string key;
  for (char c : name) key.push_back(c == '-' ? '_' : static_cast<char>(std::toupper(c)));
  if (key == "DIFFERENTIABLE") return Property::DifferentiableFirstHalf;
  for (Property p : kAllProperties)
    if (to_string(p) == key) return p;
  return std::nullopt;
}

/// Verdict of one property check. holds is true exactly when witnesses is empty.
struct PropertyReport {
  Property property;
  bool holds = true;
  std::vector<std::size_t> witnesses;
  std::string detail;

  static PropertyReport from_witnesses(Property p, std::vector<std::size_t> witnesses,
                                       std::string detail = {}) {
    std::sort(witnesses.begin(), witnesses.end());
    witnesses.erase(std::unique(witnesses.begin(), witnesses.end()), witnesses.end());
    PropertyReport r{p, witnesses.empty(), std::move(witnesses), std::move(detail)};
    return r;
  }

  friend bool operator==(const PropertyReport&, const PropertyReport&) = default;
};

}  // namespace oseq
