#include "lefcalc/lefschetz.hpp"

#include "lefcalc/error.hpp"

namespace lefcalc {

std::int64_t lambda_c(const SimplicialSelfMap& map, const OpenSimplexSet& set) {
  if (!(map.ambient() == set.ambient())) throw Error("map and set live on different complexes");
  std::int64_t total = 0;
  for (SimplexId id : set.members()) {
    auto image = map.chain_coefficient(id);
    if (!image || image->target != id) continue;
    const int parity = (set.ambient().dim(id) % 2 == 0) ? 1 : -1;
    total += parity * image->sign;
  }
  return total;
}

}  // namespace lefcalc
