#include "lefcalc/sheaf.hpp"

#include <map>

#include "lefcalc/error.hpp"
#include "lefcalc/homology.hpp"

namespace lefcalc {

namespace {

std::string describe(const SheafPiece& piece) { return "piece '" + piece.label + "'"; }

}  // namespace

ConstructibleSheaf ConstructibleSheaf::validate(const SimplicialComplex& ambient,
                                                std::vector<SheafPiece> pieces) {
  std::vector<std::size_t> owner(ambient.size(), pieces.size());
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    SheafPiece& piece = pieces[i];
    if (piece.label.empty()) piece.label = "#" + std::to_string(i);
    if (!(piece.support.ambient() == ambient)) throw Error(describe(piece) + " lives in another complex");
    if (piece.rank < 0) throw Error(describe(piece) + " has negative rank " + std::to_string(piece.rank));
    if (piece.support.empty()) throw Error(describe(piece) + " has an empty support");
    if (auto bad = local_compactness_violation(piece.support)) {
      throw Error(describe(piece) + " support " + to_string(piece.support) +
                  " is not locally compact: frontier simplex " +
                  to_string(ambient.simplex(bad->frontier_simplex)) + " has face " +
                  to_string(ambient.simplex(bad->missing_face)) + " outside the frontier");
    }
    for (SimplexId id : piece.support.members()) {
      if (owner[id] != pieces.size()) {
        throw Error("pieces '" + pieces[owner[id]].label + "' and '" + piece.label + "' overlap on simplex " +
                    to_string(ambient.simplex(id)));
      }
      owner[id] = i;
    }
  }
  ConstructibleSheaf sheaf;
  sheaf.ambient_ = ambient;
  sheaf.pieces_ = std::move(pieces);
  return sheaf;
}

bool ConstructibleSheaf::operator==(const ConstructibleSheaf& other) const {
  if (!(ambient_ == other.ambient_) || pieces_.size() != other.pieces_.size()) return false;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (!(pieces_[i].support == other.pieces_[i].support) || pieces_[i].rank != other.pieces_[i].rank)
      return false;
  }
  return true;
}

std::optional<std::string> compatibility_violation(const SimplicialSelfMap& map, const ConstructibleSheaf& sheaf) {
  if (!(map.ambient() == sheaf.ambient())) return "map and sheaf live on different complexes";
  for (const SheafPiece& piece : sheaf.pieces()) {
    if (!is_pair_invariant(map, piece.support))
      return describe(piece) + " support " + to_string(piece.support) + " is not pair-invariant";
  }
  return std::nullopt;
}

bool is_compatible(const SimplicialSelfMap& map, const ConstructibleSheaf& sheaf) {
  return !compatibility_violation(map, sheaf);
}

std::int64_t sheaf_lefschetz(const SimplicialSelfMap& map, const ConstructibleSheaf& sheaf) {
  if (auto why = compatibility_violation(map, sheaf)) throw Error("map is not compatible with the sheaf: " + *why);
  std::int64_t total = 0;
  for (const SheafPiece& piece : sheaf.pieces()) {
    if (piece.rank == 0) continue;
    total += piece.rank * l_hom(map, piece.support);
  }
  return total;
}

ConstructibleFunction associated_function(const ConstructibleSheaf& sheaf) {
  std::vector<std::int64_t> values(sheaf.ambient().size(), 0);
  for (const SheafPiece& piece : sheaf.pieces())
    for (SimplexId id : piece.support.members()) values[id] = piece.rank;
  return ConstructibleFunction::from_values(sheaf.ambient(), values);
}

ConstructibleSheaf associated_sheaf(const ConstructibleFunction& function, Part part) {
  std::vector<SheafPiece> pieces;
  for (const auto& [value, set] : function.levels()) {
    if (part == Part::positive && value > 0)
      pieces.push_back({set, static_cast<int>(value), "h=" + std::to_string(value)});
    if (part == Part::negative && value < 0)
      pieces.push_back({set, static_cast<int>(-value), "h=" + std::to_string(value)});
  }
  return ConstructibleSheaf::validate(function.ambient(), std::move(pieces));
}

}  // namespace lefcalc
