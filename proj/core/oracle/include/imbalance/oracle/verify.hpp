#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace imbalance::verify {

struct PropertyInfo {
  std::string_view name;
  std::string_view description;
  /// Smallest n the property is meaningful for.
  std::size_t min_n = 1;
};

/// Every checkable property, in the fixed order reports are produced.
std::span<const PropertyInfo> property_catalog();

struct PropertyReport {
  std::string property;
  std::size_t n = 0;
  bool passed = true;
  /// Number of elements, pairs or triples examined.
  std::size_t checked = 0;
  /// First counterexample, empty on success.
  std::string witness;
};

/// Runs one property on the universe of size n. Throws ParseError for an
/// unknown property name.
PropertyReport check_property(std::string_view name, std::size_t n);

/// Runs the selected properties (all when `names` is empty) for every
/// n in [1, max_n] at or above each property's min_n. Report order is the
/// catalog order, then ascending n.
std::vector<PropertyReport> run(std::size_t max_n, std::span<const std::string> names = {});

bool all_passed(std::span<const PropertyReport> reports);

/// One line per report: `pass  partial-order  n=5  checked=125`.
std::string format_text(std::span<const PropertyReport> reports);

/// JSON array of `{"property", "n", "status", "witness"}` objects.
std::string format_json(std::span<const PropertyReport> reports);

}  // namespace imbalance::verify
