#include "lefcalc/constructible_function.hpp"

#include "lefcalc/error.hpp"

namespace lefcalc {

ConstructibleFunction ConstructibleFunction::from_levels(const SimplicialComplex& ambient,
                                                         std::map<std::int64_t, OpenSimplexSet> levels) {
  ConstructibleFunction h;
  h.ambient_ = ambient;
  h.values_.assign(ambient.size(), 0);
  for (auto& [value, set] : levels) {
    const std::string label = "level set h = " + std::to_string(value);
    if (value == 0) throw Error(label + ": zero is implicit and cannot be listed");
    if (!(set.ambient() == ambient)) throw Error(label + " lives in another complex");
    if (auto bad = local_compactness_violation(set)) {
      throw Error(label + " is not locally compact: frontier simplex " +
                  to_string(ambient.simplex(bad->frontier_simplex)) + " has face " +
                  to_string(ambient.simplex(bad->missing_face)) + " outside the frontier");
    }
    for (SimplexId id : set.members()) {
      if (h.values_[id] != 0) {
        throw Error("level sets h = " + std::to_string(h.values_[id]) + " and h = " +
                    std::to_string(value) + " share simplex " + to_string(ambient.simplex(id)));
      }
      h.values_[id] = value;
    }
    if (!set.empty()) h.levels_.emplace(value, std::move(set));
  }
  return h;
}

ConstructibleFunction ConstructibleFunction::from_values(const SimplicialComplex& ambient,
                                                         const std::vector<std::int64_t>& values) {
  if (values.size() != ambient.size()) {
    throw Error("function has " + std::to_string(values.size()) + " values, complex has " +
                std::to_string(ambient.size()) + " simplices");
  }
  std::map<std::int64_t, std::vector<SimplexId>> ids;
  for (SimplexId id = 0; id < values.size(); ++id)
    if (values[id] != 0) ids[values[id]].push_back(id);
  std::map<std::int64_t, OpenSimplexSet> levels;
  for (auto& [value, members] : ids) levels.emplace(value, OpenSimplexSet(ambient, std::move(members)));
  return from_levels(ambient, std::move(levels));
}

ConstructibleFunction ConstructibleFunction::zero(const SimplicialComplex& ambient) {
  return from_levels(ambient, {});
}

}  // namespace lefcalc
