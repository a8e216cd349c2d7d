#include "lefcalc/homology.hpp"

#include <algorithm>

#include "lefcalc/error.hpp"

namespace lefcalc {

namespace {

std::int64_t to_integer(const Rational& value, const char* what) {
  if (denominator(value) != 1) throw InternalError(std::string(what) + " is not an integer");
  return numerator(value).convert_to<std::int64_t>();
}

}  // namespace

std::int64_t CompactSupportComplex::chain_lefschetz() const {
  std::int64_t total = 0;
  for (std::size_t p = 0; p < chain_map.size(); ++p) {
    const std::int64_t t = to_integer(chain_map[p].trace(), "chain trace");
    total += (p % 2 == 0) ? t : -t;
  }
  return total;
}

CompactSupportComplex compact_support_complex(const SimplicialSelfMap& map, const OpenSimplexSet& set) {
  const SimplicialComplex& k = set.ambient();
  if (!(map.ambient() == k)) throw Error("map and set live on different complexes");
  if (auto bad = local_compactness_violation(set)) {
    throw Error("set is not locally compact: frontier simplex " + to_string(k.simplex(bad->frontier_simplex)) +
                " has face " + to_string(k.simplex(bad->missing_face)) + " outside the frontier");
  }
  if (!is_pair_invariant(map, set)) throw Error("set is not pair-invariant under the map");

  const int top = std::max(k.dimension(), 0);
  CompactSupportComplex c;
  c.basis.resize(static_cast<std::size_t>(top) + 1);
  for (SimplexId id : set.members()) c.basis[static_cast<std::size_t>(k.dim(id))].push_back(id);

  // Position of each member within its degree's basis.
  std::vector<std::size_t> position(k.size(), 0);
  for (const auto& degree : c.basis)
    for (std::size_t i = 0; i < degree.size(); ++i) position[degree[i]] = i;

  for (std::size_t p = 0; p < c.basis.size(); ++p) {
    const auto& cols = c.basis[p];
    const std::size_t lower = (p == 0) ? 0 : c.basis[p - 1].size();
    RationalMatrix d(lower, cols.size());
    RationalMatrix m(cols.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (p > 0) {
        for (const Facet& f : k.facets(cols[j]))
          if (set.contains(f.id)) d(position[f.id], j) = f.sign;
      }
      if (auto image = map.chain_coefficient(cols[j]); image && set.contains(image->target))
        m(position[image->target], j) = image->sign;
    }
    c.boundary.push_back(std::move(d));
    c.chain_map.push_back(std::move(m));
  }

  for (std::size_t p = 1; p + 1 < c.basis.size(); ++p) {
    if (!(c.boundary[p] * c.boundary[p + 1]).is_zero())
      throw InternalError("boundary of boundary is nonzero in degree " + std::to_string(p + 1));
  }
  for (std::size_t p = 1; p < c.basis.size(); ++p) {
    if (!(c.boundary[p] * c.chain_map[p] == c.chain_map[p - 1] * c.boundary[p]))
      throw InternalError("induced map does not commute with the boundary in degree " + std::to_string(p));
  }
  return c;
}

std::int64_t HomologySummary::betti_at(int degree) const {
  if (degree < 0 || degree >= static_cast<int>(betti.size())) return 0;
  return betti[static_cast<std::size_t>(degree)];
}

std::int64_t HomologySummary::trace_at(int degree) const {
  if (degree < 0 || degree >= static_cast<int>(trace.size())) return 0;
  return trace[static_cast<std::size_t>(degree)];
}

HomologySummary homology_traces(const CompactSupportComplex& c) {
  HomologySummary summary;
  const std::size_t degrees = c.basis.size();
  for (std::size_t p = 0; p < degrees; ++p) {
    const RationalMatrix cycles = kernel_basis(c.boundary[p]);
    const RationalMatrix boundaries =
        (p + 1 < degrees) ? image_basis(c.boundary[p + 1]) : RationalMatrix(c.basis[p].size(), 0);
    const Rational t = restricted_trace(c.chain_map[p], cycles) -
                       restricted_trace(c.chain_map[p], boundaries);
    const std::int64_t betti = static_cast<std::int64_t>(cycles.cols()) -
                               static_cast<std::int64_t>(boundaries.cols());
    summary.betti.push_back(betti);
    summary.trace.push_back(to_integer(t, "homology trace"));
    summary.lefschetz += (p % 2 == 0) ? summary.trace.back() : -summary.trace.back();
  }
  return summary;
}

std::int64_t l_hom(const SimplicialSelfMap& map, const OpenSimplexSet& set) {
  return homology_traces(compact_support_complex(map, set)).lefschetz;
}

}  // namespace lefcalc
