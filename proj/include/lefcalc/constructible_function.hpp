#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "lefcalc/complex.hpp"

namespace lefcalc {

/// Integer-valued function that is constant on each open simplex, stored by
/// its nonzero level sets. Every level set is locally compact.
class ConstructibleFunction {
 public:
  ConstructibleFunction() = default;

  /// Throws Error when a value is 0, level sets overlap, a level set lives in
  /// another complex or a level set is not locally compact.
  static ConstructibleFunction from_levels(const SimplicialComplex& ambient,
                                           std::map<std::int64_t, OpenSimplexSet> levels);
  /// One value per simplex in canonical order.
  static ConstructibleFunction from_values(const SimplicialComplex& ambient,
                                           const std::vector<std::int64_t>& values);
  static ConstructibleFunction zero(const SimplicialComplex& ambient);

  const SimplicialComplex& ambient() const { return ambient_; }
  const std::map<std::int64_t, OpenSimplexSet>& levels() const { return levels_; }
  std::int64_t operator()(SimplexId id) const { return values_.at(id); }
  const std::vector<std::int64_t>& values() const { return values_; }

  bool operator==(const ConstructibleFunction& other) const {
    return ambient_ == other.ambient_ && values_ == other.values_;
  }

 private:
  SimplicialComplex ambient_;
  std::map<std::int64_t, OpenSimplexSet> levels_;
  std::vector<std::int64_t> values_;
};

}  // namespace lefcalc
