#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lefcalc {

using Vertex = int;
/// Strictly increasing list of vertex indices; dimension is size() - 1.
using Simplex = std::vector<Vertex>;
/// Position of a simplex in the canonical order of its complex.
using SimplexId = std::size_t;

std::string to_string(const Simplex& simplex);

/// An oriented codimension-one face together with its boundary sign.
struct Facet {
  SimplexId id;
  int sign;
};

/// A finite abstract simplicial complex.
///
/// Simplices are stored in canonical order: by dimension, then
/// lexicographically. A SimplexId is an index into that order. The complex is
/// immutable; copies share the underlying storage.
class SimplicialComplex {
 public:
  /// Face closure of `maximal`. Throws Error on unsorted or repeated vertices
  /// and on vertex indices outside [0, vertex_count).
  static SimplicialComplex from_maximal(std::span<const Simplex> maximal, int vertex_count);

  SimplicialComplex();

  int vertex_count() const;
  std::size_t size() const;
  /// Largest simplex dimension, -1 for the empty complex.
  int dimension() const;

  const Simplex& simplex(SimplexId id) const;
  int dim(SimplexId id) const;
  std::optional<SimplexId> find(const Simplex& simplex) const;
  /// Like find(), but throws Error naming the simplex when absent.
  SimplexId id_of(const Simplex& simplex) const;

  /// Codimension-one faces with signs (-1)^i for deleting the i-th vertex.
  std::span<const Facet> facets(SimplexId id) const;
  /// All proper nonempty faces.
  std::span<const SimplexId> faces(SimplexId id) const;

  /// Simplices that are not a proper face of another simplex.
  std::vector<Simplex> maximal_simplices() const;

  /// Same vertex count and simplex set.
  bool operator==(const SimplicialComplex& other) const;

 private:
  struct Data;
  explicit SimplicialComplex(std::shared_ptr<const Data> data);
  std::shared_ptr<const Data> data_;
};

/// A set of open simplices of an ambient complex (an incomplete subcomplex).
/// Not required to be closed under faces.
class OpenSimplexSet {
 public:
  OpenSimplexSet() = default;
  /// Members are sorted and deduplicated; throws Error on ids out of range.
  OpenSimplexSet(SimplicialComplex ambient, std::vector<SimplexId> members);

  static OpenSimplexSet all(const SimplicialComplex& ambient);
  static OpenSimplexSet none(const SimplicialComplex& ambient);
  /// Throws Error naming the first simplex that is not in `ambient`.
  static OpenSimplexSet from_simplices(const SimplicialComplex& ambient,
                                       std::span<const Simplex> simplices);

  const SimplicialComplex& ambient() const { return ambient_; }
  std::span<const SimplexId> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(SimplexId id) const { return id < mask_.size() && mask_[id]; }
  std::vector<Simplex> simplices() const;

  OpenSimplexSet united(const OpenSimplexSet& other) const;
  OpenSimplexSet intersected(const OpenSimplexSet& other) const;
  OpenSimplexSet minus(const OpenSimplexSet& other) const;
  bool disjoint(const OpenSimplexSet& other) const;

  bool operator==(const OpenSimplexSet& other) const;

 private:
  void require_same_ambient(const OpenSimplexSet& other) const;

  SimplicialComplex ambient_;
  std::vector<SimplexId> members_;
  std::vector<bool> mask_;
};

std::string to_string(const OpenSimplexSet& set);

struct ClosureAndFrontier {
  OpenSimplexSet closure;
  OpenSimplexSet frontier;
};

OpenSimplexSet closure(const OpenSimplexSet& set);
/// cl(U) \ U.
OpenSimplexSet frontier(const OpenSimplexSet& set);
ClosureAndFrontier closure_and_frontier(const OpenSimplexSet& set);

/// True when every face of every member is a member.
bool is_face_closed(const OpenSimplexSet& set);

/// A frontier simplex together with one of its faces missing from the
/// frontier; witnesses that a set is not locally compact.
struct LocalCompactnessViolation {
  SimplexId frontier_simplex;
  SimplexId missing_face;
};

std::optional<LocalCompactnessViolation> local_compactness_violation(const OpenSimplexSet& set);
/// U is locally compact iff cl(U) \ U is a subcomplex.
bool is_locally_compact(const OpenSimplexSet& set);

/// Classes of the face-incidence relation among members, ordered by their
/// smallest member.
std::vector<OpenSimplexSet> connected_components(const OpenSimplexSet& set);

/// Compactly supported Euler characteristic: sum of (-1)^dim over members.
std::int64_t euler_cc(const OpenSimplexSet& set);

/// Members of dimension exactly `dimension`.
OpenSimplexSet skeleton_layer(const OpenSimplexSet& set, int dimension);

}  // namespace lefcalc
