#include <catch_amalgamated.hpp>

#include "lefcalc/document.hpp"
#include "lefcalc/error.hpp"
#include "lefcalc/generator.hpp"
#include "lefcalc/homology.hpp"
#include "lefcalc/paper_example.hpp"
#include "lefcalc/sheaf.hpp"

using namespace lefcalc;

namespace {

SimplicialComplex triangle() { return SimplicialComplex::from_maximal(std::vector<Simplex>{{0, 1, 2}}, 3); }

OpenSimplexSet set_of(const SimplicialComplex& k, std::vector<Simplex> simplices) {
  return OpenSimplexSet::from_simplices(k, simplices);
}

}  // namespace

TEST_CASE("constant sheaf on a closed triangle") {
  const auto k = triangle();
  const auto f = ConstructibleSheaf::validate(k, {{OpenSimplexSet::all(k), 4, "T"}});
  CHECK(sheaf_lefschetz(SimplicialSelfMap::identity(k), f) == 4);
  CHECK(sheaf_lefschetz(SimplicialSelfMap::validate(k, {1, 2, 0}), f) == 4);
}

TEST_CASE("bundled example sheaf") {
  const Instance inst = parse_instance_text(paper_example_document());
  REQUIRE(inst.sheaf);
  CHECK(sheaf_lefschetz(inst.map, *inst.sheaf) == 3);
  // Rank-weighted sum of per-piece numbers, computed piece by piece.
  std::int64_t sum = 0;
  for (const SheafPiece& piece : inst.sheaf->pieces()) sum += piece.rank * l_hom(inst.map, piece.support);
  CHECK(sum == 3);
}

TEST_CASE("zero ranks give zero") {
  const Instance inst = parse_instance_text(paper_example_document());
  std::vector<SheafPiece> pieces = inst.sheaf->pieces();
  for (SheafPiece& p : pieces) p.rank = 0;
  CHECK(sheaf_lefschetz(inst.map, ConstructibleSheaf::validate(inst.complex, pieces)) == 0);
}

TEST_CASE("validation errors name the pieces") {
  const auto k = triangle();
  CHECK_THROWS_WITH(ConstructibleSheaf::validate(k, {{set_of(k, {{0}, {0, 1}}), 1, "A"}, {set_of(k, {{0, 1}}), 2, "B"}}),
                    Catch::Matchers::ContainsSubstring("'A'") && Catch::Matchers::ContainsSubstring("'B'") &&
                        Catch::Matchers::ContainsSubstring("overlap"));
  CHECK_THROWS_WITH(ConstructibleSheaf::validate(k, {{set_of(k, {{0, 1, 2}, {0}}), 1, "L"}}),
                    Catch::Matchers::ContainsSubstring("'L'") && Catch::Matchers::ContainsSubstring("not locally compact"));
  CHECK_THROWS_AS(ConstructibleSheaf::validate(k, {{set_of(k, {{0}}), -1, ""}}), Error);
  CHECK_THROWS_AS(ConstructibleSheaf::validate(k, {{OpenSimplexSet::none(k), 1, ""}}), Error);
  const auto other = SimplicialComplex::from_maximal(std::vector<Simplex>{{0, 1}}, 2);
  CHECK_THROWS_AS(ConstructibleSheaf::validate(k, {{OpenSimplexSet::all(other), 1, ""}}), Error);
}

TEST_CASE("compatibility with a rotation") {
  const auto k = triangle();
  const auto rotation = SimplicialSelfMap::validate(k, {1, 2, 0});
  const auto vertices = ConstructibleSheaf::validate(k, {{set_of(k, {{0}, {1}, {2}}), 2, "V"}});
  CHECK(is_compatible(rotation, vertices));
  const auto one_vertex = ConstructibleSheaf::validate(k, {{set_of(k, {{0}}), 2, "P"}});
  CHECK_FALSE(is_compatible(rotation, one_vertex));
  CHECK(compatibility_violation(rotation, one_vertex).value().find("'P'") != std::string::npos);
  CHECK_THROWS_AS(sheaf_lefschetz(rotation, one_vertex), Error);
  // Vertices of a closed triangle: three points cyclically permuted.
  CHECK(sheaf_lefschetz(rotation, vertices) == 0);
}

TEST_CASE("associated function and sheaf") {
  const Instance inst = parse_instance_text(paper_example_document());
  const ConstructibleFunction h = associated_function(*inst.sheaf);
  CHECK(h == *inst.function);
  CHECK(h(inst.complex.id_of({0, 2})) == 2);
  CHECK(h.levels().size() == 4);

  const ConstructibleSheaf pos = associated_sheaf(h, Part::positive);
  CHECK(associated_function(pos) == h);
  CHECK(associated_sheaf(h, Part::negative).pieces().empty());
  CHECK(sheaf_lefschetz(inst.map, pos) == 3);
}

TEST_CASE("sheaf properties on random instances") {
  InstanceBudget budget;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Instance inst = random_instance(budget, seed);
    REQUIRE(inst.sheaf);
    const auto& f = *inst.sheaf;
    INFO("seed " << seed);

    // Linearity in the ranks.
    std::vector<SheafPiece> doubled = f.pieces();
    for (SheafPiece& p : doubled) p.rank *= 2;
    const std::int64_t once = sheaf_lefschetz(inst.map, f);
    CHECK(sheaf_lefschetz(inst.map, ConstructibleSheaf::validate(inst.complex, doubled)) == 2 * once);

    // Refinement invariance: splitting a piece along orbits keeps the number.
    std::vector<SheafPiece> refined;
    for (const SheafPiece& piece : f.pieces()) {
      std::vector<SheafPiece> parts;
      bool ok = true;
      for (const OpenSimplexSet& orbit : simplex_orbits(inst.map)) {
        OpenSimplexSet part = piece.support.intersected(orbit);
        if (part.empty()) continue;
        ok = ok && is_admissible(inst.map, part);
        parts.push_back({std::move(part), piece.rank, piece.label});
      }
      if (!ok) parts = {piece};
      refined.insert(refined.end(), parts.begin(), parts.end());
    }
    CHECK(sheaf_lefschetz(inst.map, ConstructibleSheaf::validate(inst.complex, refined)) == once);
  }
}
