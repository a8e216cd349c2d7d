#pragma once

#include <cstdint>
#include <vector>

#include "lefcalc/complex.hpp"
#include "lefcalc/constructible_function.hpp"
#include "lefcalc/simplicial_map.hpp"

namespace lefcalc {

struct RepresentationTerm {
  std::int64_t coefficient = 0;
  OpenSimplexSet set;
};

/// A formal sum of indicator functions; the sets may overlap.
struct Representation {
  std::vector<RepresentationTerm> terms;

  /// Concatenation of term lists.
  Representation operator+(const Representation& other) const;
  /// The represented function, one value per simplex of `ambient`.
  std::vector<std::int64_t> evaluate(const SimplicialComplex& ambient) const;
};

/// Integral with respect to the Lefschetz number: the coefficient-weighted
/// sum of combinatorial Lefschetz numbers of the term sets.
///
/// Every term set must be locally compact and pair-invariant; otherwise
/// throws Error naming the term.
std::int64_t integrate(const SimplicialSelfMap& map, const Representation& representation);

/// One term (j, h^-1(j)) per nonzero value j, in increasing order of j.
Representation canonical_representation(const ConstructibleFunction& function);

/// Difference of the sheaf Lefschetz numbers of the positive and negative
/// parts of `function`.
std::int64_t barrow(const SimplicialSelfMap& map, const ConstructibleFunction& function);

}  // namespace lefcalc
