#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lefcalc/complex.hpp"

namespace lefcalc {

/// Image of an oriented simplex under the induced chain map: sigma -> sign * target.
struct ChainImage {
  SimplexId target;
  int sign;

  bool operator==(const ChainImage&) const = default;
};

/// A simplicial self-map given by its vertex images.
class SimplicialSelfMap {
 public:
  SimplicialSelfMap() = default;

  /// Checks simpliciality against every simplex of `complex`. Throws Error for
  /// a wrong image count, an out-of-range image, or a simplex whose image
  /// vertex set is not a simplex (the message names that simplex).
  static SimplicialSelfMap validate(SimplicialComplex complex, std::vector<Vertex> vertex_images);
  static SimplicialSelfMap identity(SimplicialComplex complex);

  const SimplicialComplex& ambient() const { return ambient_; }
  std::span<const Vertex> vertex_images() const { return images_; }

  /// The simplex spanned by the images of the vertices of `id`.
  SimplexId image(SimplexId id) const { return image_.at(id); }

  /// nullopt when the map is not injective on the vertices of `id`;
  /// otherwise the sorted image and the sign of the sorting permutation.
  std::optional<ChainImage> chain_coefficient(SimplexId id) const;

  /// Vertex-wise composition: (this ∘ inner)(v) = this(inner(v)).
  SimplicialSelfMap after(const SimplicialSelfMap& inner) const;

  /// A deliberately broken copy whose chain coefficients have the opposite
  /// sign. Exists only so the verification suites can prove they detect it.
  SimplicialSelfMap with_flipped_chain_sign() const;

  bool operator==(const SimplicialSelfMap& other) const {
    return ambient_ == other.ambient_ && images_ == other.images_ &&
           sign_flip_ == other.sign_flip_;
  }

 private:
  SimplicialComplex ambient_;
  std::vector<Vertex> images_;
  std::vector<SimplexId> image_;
  std::vector<int> sign_;  // 0 for degenerate images
  int sign_flip_ = 1;
};

/// g maps cl(U) into cl(U) and cl(U) \ U into cl(U) \ U.
bool is_pair_invariant(const SimplicialSelfMap& map, const OpenSimplexSet& set);

/// Weakly connected components of the functional graph sigma -> image(sigma),
/// ordered by smallest member.
std::vector<OpenSimplexSet> simplex_orbits(const SimplicialSelfMap& map);

}  // namespace lefcalc
