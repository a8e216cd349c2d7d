#include "lefcalc/calculus.hpp"

#include "lefcalc/error.hpp"
#include "lefcalc/lefschetz.hpp"
#include "lefcalc/sheaf.hpp"

namespace lefcalc {

Representation Representation::operator+(const Representation& other) const {
  Representation out = *this;
  out.terms.insert(out.terms.end(), other.terms.begin(), other.terms.end());
  return out;
}

std::vector<std::int64_t> Representation::evaluate(const SimplicialComplex& ambient) const {
  std::vector<std::int64_t> values(ambient.size(), 0);
  for (const RepresentationTerm& term : terms) {
    if (!(term.set.ambient() == ambient)) throw Error("representation term lives in another complex");
    for (SimplexId id : term.set.members()) values[id] += term.coefficient;
  }
  return values;
}

std::int64_t integrate(const SimplicialSelfMap& map, const Representation& representation) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < representation.terms.size(); ++i) {
    const RepresentationTerm& term = representation.terms[i];
    const std::string label = "term #" + std::to_string(i) + " " + to_string(term.set);
    if (!(term.set.ambient() == map.ambient())) throw Error(label + " lives in another complex");
    if (!is_locally_compact(term.set)) throw Error(label + " is not locally compact");
    if (!is_pair_invariant(map, term.set)) throw Error(label + " is not pair-invariant");
    total += term.coefficient * lambda_c(map, term.set);
  }
  return total;
}

Representation canonical_representation(const ConstructibleFunction& function) {
  Representation rep;
  for (const auto& [value, set] : function.levels()) rep.terms.push_back({value, set});
  return rep;
}

std::int64_t barrow(const SimplicialSelfMap& map, const ConstructibleFunction& function) {
  return sheaf_lefschetz(map, associated_sheaf(function, Part::positive)) -
         sheaf_lefschetz(map, associated_sheaf(function, Part::negative));
}

}  // namespace lefcalc
