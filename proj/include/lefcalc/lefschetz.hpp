#pragma once

#include <cstdint>

#include "lefcalc/complex.hpp"
#include "lefcalc/simplicial_map.hpp"

namespace lefcalc {

/// Combinatorial Lefschetz number: alternating sum over dimensions of the
/// traces of the induced chain map restricted to the simplices of `set`.
///
/// Pair invariance is not needed to evaluate the sum. Throws Error when the
/// set and the map live on different complexes.
std::int64_t lambda_c(const SimplicialSelfMap& map, const OpenSimplexSet& set);

}  // namespace lefcalc
