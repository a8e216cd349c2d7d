#include <catch_amalgamated.hpp>

#include <set>

#include "lefcalc/error.hpp"
#include "lefcalc/generator.hpp"
#include "lefcalc/simplicial_map.hpp"

using namespace lefcalc;

namespace {

SimplicialComplex triangle() { return SimplicialComplex::from_maximal(std::vector<Simplex>{{0, 1, 2}}, 3); }
SimplicialComplex triangle_boundary() {
  return SimplicialComplex::from_maximal(std::vector<Simplex>{{0, 1}, {0, 2}, {1, 2}}, 3);
}

// Oracle: sign of the permutation that sorts `images`, by counting inversions;
// 0 if two entries coincide.
int inversion_sign(const std::vector<Vertex>& images) {
  int sign = 1;
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j) {
      if (images[i] == images[j]) return 0;
      if (images[i] > images[j]) sign = -sign;
    }
  return sign;
}

std::set<Simplex> orbit_simplices(const OpenSimplexSet& orbit) {
  auto v = orbit.simplices();
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("validate accepts simplicial maps") {
  CHECK_NOTHROW(SimplicialSelfMap::validate(triangle_boundary(), {1, 2, 0}));
  CHECK_NOTHROW(SimplicialSelfMap::validate(triangle(), {0, 0, 2}));
  CHECK_NOTHROW(SimplicialSelfMap::validate(triangle(), {0, 0, 0}));
}

TEST_CASE("validate rejects bad maps") {
  CHECK_THROWS_AS(SimplicialSelfMap::validate(triangle(), {0, 1}), Error);
  CHECK_THROWS_WITH(SimplicialSelfMap::validate(triangle(), {0, 1, 3}), Catch::Matchers::ContainsSubstring("out of range"));
  const auto path = SimplicialComplex::from_maximal(std::vector<Simplex>{{0, 1}, {1, 2}}, 3);
  // Edge 01 maps to 02, which is absent.
  CHECK_THROWS_WITH(SimplicialSelfMap::validate(path, {0, 2, 1}),
                    Catch::Matchers::ContainsSubstring("not simplicial") && Catch::Matchers::ContainsSubstring("[0,1]"));
}

TEST_CASE("chain coefficients") {
  const auto k = triangle();
  const auto id = SimplicialSelfMap::identity(k);
  auto c = id.chain_coefficient(k.id_of({0, 1, 2}));
  REQUIRE(c);
  CHECK(c->target == k.id_of({0, 1, 2}));
  CHECK(c->sign == 1);

  const auto swap = SimplicialSelfMap::validate(k, {1, 0, 2});
  c = swap.chain_coefficient(k.id_of({0, 1}));
  REQUIRE(c);
  CHECK(c->target == k.id_of({0, 1}));
  CHECK(c->sign == -1);
  CHECK(swap.chain_coefficient(k.id_of({0, 1, 2}))->sign == -1);
  CHECK(swap.chain_coefficient(k.id_of({0, 2}))->target == k.id_of({1, 2}));
  CHECK(swap.chain_coefficient(k.id_of({0, 2}))->sign == 1);

  const auto collapse = SimplicialSelfMap::validate(k, {0, 0, 2});
  CHECK_FALSE(collapse.chain_coefficient(k.id_of({0, 1})));
  CHECK(collapse.image(k.id_of({0, 1})) == k.id_of({0}));

  const auto flipped = swap.with_flipped_chain_sign();
  CHECK(flipped.chain_coefficient(k.id_of({0, 1}))->sign == 1);
  CHECK_FALSE(flipped == swap);
}

TEST_CASE("chain coefficients agree with an inversion count") {
  const InstanceBudget budget;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Rng rng(seed);
    const auto g = random_complex_and_map(budget, rng);
    const auto& k = g.ambient();
    for (SimplexId id = 0; id < k.size(); ++id) {
      std::vector<Vertex> images;
      for (Vertex v : k.simplex(id)) images.push_back(g.vertex_images()[v]);
      const int sign = inversion_sign(images);
      const auto c = g.chain_coefficient(id);
      INFO("seed " << seed << " simplex " << id);
      CHECK(bool(c) == (sign != 0));
      if (c) CHECK(c->sign == sign);
      std::set<Vertex> unique(images.begin(), images.end());
      CHECK(k.simplex(g.image(id)) == Simplex(unique.begin(), unique.end()));
    }
  }
}

TEST_CASE("composition is functorial on chains") {
  const InstanceBudget budget;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    const auto g = random_complex_and_map(budget, rng);
    const auto gg = g.after(g);
    const auto& k = g.ambient();
    for (SimplexId id = 0; id < k.size(); ++id) {
      const auto inner = g.chain_coefficient(id);
      std::optional<ChainImage> expected;
      if (inner) {
        if (auto outer = g.chain_coefficient(inner->target)) expected = ChainImage{outer->target, inner->sign * outer->sign};
      }
      INFO("seed " << seed << " simplex " << id);
      CHECK(gg.chain_coefficient(id) == expected);
    }
  }
}

TEST_CASE("pair invariance") {
  const auto path = SimplicialComplex::from_maximal(std::vector<Simplex>{{0, 2}, {1, 2}}, 3);
  const auto swap = SimplicialSelfMap::validate(path, {1, 0, 2});
  // cl{02} = {0, 2, 02} is moved onto {1, 2, 12}.
  CHECK_FALSE(is_pair_invariant(swap, OpenSimplexSet::from_simplices(path, std::vector<Simplex>{{0, 2}})));
  CHECK(is_pair_invariant(swap, OpenSimplexSet::from_simplices(path, std::vector<Simplex>{{2}})));
  CHECK(is_pair_invariant(swap, OpenSimplexSet::from_simplices(path, std::vector<Simplex>{{0, 2}, {1, 2}})));
  CHECK(is_pair_invariant(swap, OpenSimplexSet::all(path)));

  // The frontier must go to the frontier: U = {01, 1} with 0 -> 1 sends the
  // frontier vertex 0 into U.
  const auto edge = SimplicialComplex::from_maximal(std::vector<Simplex>{{0, 1}}, 2);
  const auto fold = SimplicialSelfMap::validate(edge, {1, 1});
  CHECK_FALSE(is_pair_invariant(fold, OpenSimplexSet::from_simplices(edge, std::vector<Simplex>{{1}, {0, 1}})));
  CHECK(is_pair_invariant(fold, OpenSimplexSet::from_simplices(edge, std::vector<Simplex>{{1}})));
}

TEST_CASE("simplex orbits") {
  const auto k = triangle_boundary();
  CHECK(simplex_orbits(SimplicialSelfMap::identity(k)).size() == k.size());

  const auto rotation = SimplicialSelfMap::validate(k, {1, 2, 0});
  const auto orbits = simplex_orbits(rotation);
  REQUIRE(orbits.size() == 2);
  CHECK(orbit_simplices(orbits[0]) == std::set<Simplex>{{0}, {1}, {2}});
  CHECK(orbit_simplices(orbits[1]) == std::set<Simplex>{{0, 1}, {0, 2}, {1, 2}});

  const auto edge = SimplicialComplex::from_maximal(std::vector<Simplex>{{0, 1}}, 2);
  const auto collapse = SimplicialSelfMap::validate(edge, {0, 0});
  const auto one = simplex_orbits(collapse);
  REQUIRE(one.size() == 1);
  CHECK(orbit_simplices(one[0]) == std::set<Simplex>{{0}, {1}, {0, 1}});
}

TEST_CASE("orbits partition the complex and are closed under the map") {
  const InstanceBudget budget;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    const auto g = random_complex_and_map(budget, rng);
    std::size_t total = 0;
    for (const auto& orbit : simplex_orbits(g)) {
      total += orbit.size();
      for (SimplexId id : orbit.members()) CHECK(orbit.contains(g.image(id)));
    }
    CHECK(total == g.ambient().size());
  }
}
