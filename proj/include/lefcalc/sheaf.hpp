#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lefcalc/complex.hpp"
#include "lefcalc/constructible_function.hpp"
#include "lefcalc/simplicial_map.hpp"

namespace lefcalc {

/// Extension by zero of the constant sheaf of rank `rank` on `support`.
struct SheafPiece {
  OpenSimplexSet support;
  int rank = 0;
  /// Used in diagnostics; defaults to "#<index>" when empty.
  std::string label;
};

/// A constructible sheaf in associated form: the direct sum of its pieces.
/// Supports are nonempty, pairwise disjoint and locally compact; they need
/// not cover the complex.
class ConstructibleSheaf {
 public:
  ConstructibleSheaf() = default;

  /// Throws Error naming the offending pieces on overlap, on an empty or
  /// non-locally-compact support, on a negative rank or on a foreign complex.
  static ConstructibleSheaf validate(const SimplicialComplex& ambient, std::vector<SheafPiece> pieces);

  const SimplicialComplex& ambient() const { return ambient_; }
  const std::vector<SheafPiece>& pieces() const { return pieces_; }

  bool operator==(const ConstructibleSheaf& other) const;

 private:
  SimplicialComplex ambient_;
  std::vector<SheafPiece> pieces_;
};

/// Why `map` fails to respect the pieces of `sheaf`, or nullopt.
std::optional<std::string> compatibility_violation(const SimplicialSelfMap& map, const ConstructibleSheaf& sheaf);
/// Every support is pair-invariant under `map`.
bool is_compatible(const SimplicialSelfMap& map, const ConstructibleSheaf& sheaf);

/// Alternating sum of traces on compactly supported cohomology with
/// coefficients in the sheaf: the rank-weighted sum of the pieces' numbers.
/// Throws Error when the map is not compatible with the sheaf.
std::int64_t sheaf_lefschetz(const SimplicialSelfMap& map, const ConstructibleSheaf& sheaf);

/// Fiber dimension at each simplex.
ConstructibleFunction associated_function(const ConstructibleSheaf& sheaf);

enum class Part { positive, negative };

/// positive: pieces (h^-1(j), j) for j > 0; negative: (h^-1(j), -j) for j < 0.
ConstructibleSheaf associated_sheaf(const ConstructibleFunction& function, Part part);

}  // namespace lefcalc
