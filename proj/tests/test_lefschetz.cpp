#include <catch_amalgamated.hpp>

#include <algorithm>

#include "lefcalc/document.hpp"
#include "lefcalc/error.hpp"
#include "lefcalc/generator.hpp"
#include "lefcalc/lefschetz.hpp"
#include "lefcalc/paper_example.hpp"

using namespace lefcalc;

namespace {

// Oracle: a simplex contributes (-1)^dim * sign when its vertex images are a
// permutation of its own vertices, and nothing otherwise.
std::int64_t naive_lambda(const SimplicialSelfMap& g, const OpenSimplexSet& u) {
  const auto& k = g.ambient();
  std::int64_t total = 0;
  for (SimplexId id : u.members()) {
    const Simplex& s = k.simplex(id);
    std::vector<Vertex> images;
    for (Vertex v : s) images.push_back(g.vertex_images()[v]);
    if (!std::is_permutation(images.begin(), images.end(), s.begin())) continue;
    int sign = 1;
    for (std::size_t i = 0; i < images.size(); ++i)
      for (std::size_t j = i + 1; j < images.size(); ++j)
        if (images[i] > images[j]) sign = -sign;
    total += (s.size() % 2 == 1 ? 1 : -1) * sign;
  }
  return total;
}

}  // namespace

TEST_CASE("lambda_c on small examples") {
  const auto circle = SimplicialComplex::from_maximal(std::vector<Simplex>{{0, 1}, {0, 2}, {1, 2}}, 3);
  CHECK(lambda_c(SimplicialSelfMap::validate(circle, {1, 2, 0}), OpenSimplexSet::all(circle)) == 0);

  const auto edge = SimplicialComplex::from_maximal(std::vector<Simplex>{{0, 1}}, 2);
  const auto swap = SimplicialSelfMap::validate(edge, {1, 0});
  CHECK(lambda_c(swap, OpenSimplexSet::all(edge)) == 1);
  CHECK(lambda_c(swap, OpenSimplexSet::from_simplices(edge, std::vector<Simplex>{{0, 1}})) == 1);

  const auto triangle = SimplicialComplex::from_maximal(std::vector<Simplex>{{0, 1, 2}}, 3);
  CHECK(lambda_c(SimplicialSelfMap::identity(triangle), OpenSimplexSet::all(triangle)) == 1);
  CHECK(lambda_c(SimplicialSelfMap::validate(triangle, {0, 0, 0}), OpenSimplexSet::all(triangle)) == 1);
  CHECK(lambda_c(SimplicialSelfMap::identity(triangle), OpenSimplexSet::none(triangle)) == 0);
}

TEST_CASE("lambda_c rejects sets from another complex") {
  const auto a = SimplicialComplex::from_maximal(std::vector<Simplex>{{0, 1}}, 2);
  const auto b = SimplicialComplex::from_maximal(std::vector<Simplex>{{0, 1, 2}}, 3);
  CHECK_THROWS_AS(lambda_c(SimplicialSelfMap::identity(a), OpenSimplexSet::all(b)), Error);
}

TEST_CASE("bundled example pieces") {
  const Instance inst = parse_instance_text(paper_example_document());
  const std::vector<std::pair<std::string, std::int64_t>> expected{
      {"X1", 1}, {"X2", 1}, {"X3", -1}, {"X4", 0}, {"X5", 0}};
  for (const auto& [name, value] : expected) {
    INFO(name);
    CHECK(lambda_c(inst.map, inst.set(name)) == value);
    CHECK(naive_lambda(inst.map, inst.set(name)) == value);
  }
}

TEST_CASE("lambda_c agrees with the naive count and with euler_cc for the identity") {
  const InstanceBudget budget;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    Rng rng(seed);
    const auto g = random_complex_and_map(budget, rng);
    const auto u = random_subset(g.ambient(), rng);
    INFO("seed " << seed);
    CHECK(lambda_c(g, u) == naive_lambda(g, u));
    CHECK(lambda_c(SimplicialSelfMap::identity(g.ambient()), u) == euler_cc(u));
  }
}
