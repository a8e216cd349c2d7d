#pragma once

#include <cstdint>
#include <vector>

#include "lefcalc/complex.hpp"
#include "lefcalc/rational_matrix.hpp"
#include "lefcalc/simplicial_map.hpp"

namespace lefcalc {

/// The relative chain complex C_*(cl U, cl U \ U), which computes compactly
/// supported (co)homology of a locally compact U, together with the induced
/// endomorphism.
///
/// Degrees run from 0 to the ambient dimension. In degree p the basis is the
/// p-simplices of U in canonical order; boundary[p] maps C_p to C_{p-1}
/// (boundary[0] has zero rows) and chain_map[p] is square on C_p.
struct CompactSupportComplex {
  std::vector<std::vector<SimplexId>> basis;
  std::vector<RationalMatrix> boundary;
  std::vector<RationalMatrix> chain_map;

  int top_degree() const { return static_cast<int>(basis.size()) - 1; }
  /// Sum over p of (-1)^p tr(chain_map[p]).
  std::int64_t chain_lefschetz() const;
};

/// Throws Error if `set` is not locally compact or not pair-invariant under
/// `map`, and InternalError if the assembled matrices fail d∘d = 0 or the
/// chain-map identity.
CompactSupportComplex compact_support_complex(const SimplicialSelfMap& map, const OpenSimplexSet& set);

struct HomologySummary {
  std::vector<std::int64_t> betti;
  std::vector<std::int64_t> trace;
  std::int64_t lefschetz = 0;

  /// Zero outside the stored degree range.
  std::int64_t betti_at(int degree) const;
  std::int64_t trace_at(int degree) const;
};

/// Betti numbers and traces of the induced map on rational homology.
/// tr(H_p) = tr(map on ker d_p) - tr(map on im d_{p+1}).
HomologySummary homology_traces(const CompactSupportComplex& complex);

/// Sheaf-theoretic Lefschetz number of the constant rank-one sheaf on `set`.
std::int64_t l_hom(const SimplicialSelfMap& map, const OpenSimplexSet& set);

}  // namespace lefcalc
