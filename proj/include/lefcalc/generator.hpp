#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "lefcalc/complex.hpp"
#include "lefcalc/constructible_function.hpp"
#include "lefcalc/document.hpp"
#include "lefcalc/sheaf.hpp"
#include "lefcalc/simplicial_map.hpp"

namespace lefcalc {

/// Size limits for randomly generated instances.
struct InstanceBudget {
  int max_vertices = 8;
  int max_dimension = 3;
  std::size_t case_count = 100;
  std::uint64_t seed = 0;
};

/// Throws Error unless max_vertices >= 1, max_dimension >= 0 and case_count >= 1.
void validate_budget(const InstanceBudget& budget);

/// Seeded generator with platform-independent range reduction, so that a
/// seed reproduces the same instance everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n); n must be positive.
  std::size_t below(std::size_t n);
  /// Uniform in [lo, hi].
  int between(int lo, int hi);
  /// True with probability numerator / denominator.
  bool chance(std::size_t numerator, std::size_t denominator) { return below(denominator) < numerator; }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// Seed for case `index` of a suite started from `seed`.
std::uint64_t case_seed(std::uint64_t seed, std::size_t index);

/// Locally compact and pair-invariant.
bool is_admissible(const SimplicialSelfMap& map, const OpenSimplexSet& set);

/// Random complex on at most budget.max_vertices vertices together with a
/// simplicial self-map found by rejection sampling (1000 draws), falling back
/// to a symmetry of a vertex-transitive complex.
SimplicialSelfMap random_complex_and_map(const InstanceBudget& budget, Rng& rng);

/// Random nonempty admissible set disjoint from `avoid`, or nullopt.
std::optional<OpenSimplexSet> random_admissible_set(const SimplicialSelfMap& map, Rng& rng,
                                                    const OpenSimplexSet* avoid = nullptr);
/// Like random_admissible_set, falling back to the whole complex.
OpenSimplexSet random_invariant_set(const SimplicialSelfMap& map, Rng& rng);
/// Face-closed set A with map(A) inside A.
OpenSimplexSet random_invariant_subcomplex(const SimplicialSelfMap& map, Rng& rng);
/// Arbitrary subset, no invariance.
OpenSimplexSet random_subset(const SimplicialComplex& complex, Rng& rng);

/// Sheaf with ranks in [0, 5] whose pieces are admissible and whose
/// associated function has admissible level sets.
ConstructibleSheaf random_compatible_sheaf(const SimplicialSelfMap& map, Rng& rng);
/// Function with values in [-5, 5] and admissible level sets.
ConstructibleFunction random_function(const SimplicialSelfMap& map, Rng& rng);

/// Complex, map, an admissible set "U", a compatible sheaf and a function.
Instance random_instance(const InstanceBudget& budget, std::uint64_t seed);

/// Wedge of two triangle boundaries at vertex 0 with the loops exchanged;
/// rank-one sheaf on everything.
Instance figure_eight_swap();
/// Wedge of circles or of 2-sphere boundaries with a symmetry permuting and
/// reflecting summands, or a random complex of dimension at most one.
Instance random_wedge_instance(const InstanceBudget& budget, Rng& rng);

}  // namespace lefcalc
