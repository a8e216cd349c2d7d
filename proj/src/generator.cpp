#include "lefcalc/generator.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "lefcalc/error.hpp"

namespace lefcalc {

void validate_budget(const InstanceBudget& budget) {
  if (budget.max_vertices < 1) throw Error("max_vertices must be at least 1");
  if (budget.max_dimension < 0) throw Error("max_dimension must be non-negative");
  if (budget.case_count < 1) throw Error("case_count must be at least 1");
}

std::size_t Rng::below(std::size_t n) {
  if (n == 0) throw InternalError("Rng::below(0)");
  const std::uint64_t bound = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return static_cast<std::size_t>(x % bound);
}

int Rng::between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::size_t>(hi - lo) + 1)); }

std::uint64_t case_seed(std::uint64_t seed, std::size_t index) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (static_cast<std::uint64_t>(index) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

bool is_admissible(const SimplicialSelfMap& map, const OpenSimplexSet& set) {
  return is_locally_compact(set) && is_pair_invariant(map, set);
}

namespace {

constexpr int kMapAttempts = 1000;

std::vector<Vertex> iota_vertices(int n) {
  std::vector<Vertex> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

Simplex random_simplex(int n, int max_dimension, Rng& rng) {
  const int top = std::min(max_dimension, n - 1);
  const int size = 1 + static_cast<int>(rng.below(static_cast<std::size_t>(top) + 1));
  std::vector<Vertex> vertices = iota_vertices(n);
  rng.shuffle(vertices);
  Simplex s(vertices.begin(), vertices.begin() + size);
  std::sort(s.begin(), s.end());
  return s;
}

void add_singletons(std::vector<Simplex>& simplices, int n) {
  for (Vertex v = 0; v < n; ++v) simplices.push_back({v});
}

std::optional<SimplicialSelfMap> try_map(const SimplicialComplex& k, std::vector<Vertex> images) {
  try {
    return SimplicialSelfMap::validate(k, std::move(images));
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::vector<Vertex> candidate_images(const SimplicialComplex& k, Rng& rng) {
  const int n = k.vertex_count();
  std::vector<Vertex> images = iota_vertices(n);
  const std::size_t strategy = rng.below(20);
  if (strategy < 7) {
    rng.shuffle(images);
  } else if (strategy < 12) {
    for (Vertex& v : images) v = static_cast<Vertex>(rng.below(static_cast<std::size_t>(n)));
  } else if (strategy < 15) {
    // Everything lands in one simplex: always simplicial.
    const SimplexId target = static_cast<SimplexId>(rng.below(k.size()));
    const Simplex& s = k.simplex(target);
    for (Vertex& v : images) v = s[rng.below(s.size())];
  } else if (strategy < 19) {
    // Move some vertices along an incident edge.
    std::vector<std::vector<Vertex>> neighbours(static_cast<std::size_t>(n));
    for (SimplexId id = 0; id < k.size(); ++id) {
      const Simplex& s = k.simplex(id);
      if (s.size() == 2) {
        neighbours[s[0]].push_back(s[1]);
        neighbours[s[1]].push_back(s[0]);
      }
    }
    for (Vertex v = 0; v < n; ++v)
      if (!neighbours[v].empty() && rng.chance(1, 2)) images[v] = neighbours[v][rng.below(neighbours[v].size())];
  }
  return images;
}

// Cycle on n >= 3 vertices, or the full simplex on fewer, with a symmetry.
SimplicialSelfMap vertex_transitive_fallback(int n, Rng& rng) {
  std::vector<Simplex> maximal;
  std::vector<Vertex> images = iota_vertices(n);
  if (n >= 3) {
    for (Vertex v = 0; v < n; ++v) {
      Simplex e{v, (v + 1) % n};
      std::sort(e.begin(), e.end());
      maximal.push_back(e);
    }
    const int shift = static_cast<int>(rng.below(static_cast<std::size_t>(n)));
    const bool reflect = rng.chance(1, 2);
    for (Vertex v = 0; v < n; ++v) images[v] = ((reflect ? n - v : v) + shift) % n;
  } else {
    maximal.push_back(iota_vertices(n));
    rng.shuffle(images);
  }
  auto k = SimplicialComplex::from_maximal(maximal, n);
  return SimplicialSelfMap::validate(k, images);
}

OpenSimplexSet union_of(const SimplicialComplex& k, const std::vector<const OpenSimplexSet*>& parts) {
  std::vector<SimplexId> ids;
  for (const OpenSimplexSet* part : parts) ids.insert(ids.end(), part->members().begin(), part->members().end());
  return OpenSimplexSet(k, std::move(ids));
}

// Smallest set containing `seeds` and closed under the map.
OpenSimplexSet forward_closure(const SimplicialSelfMap& map, std::vector<SimplexId> seeds) {
  std::vector<bool> in(map.ambient().size(), false);
  std::vector<SimplexId> stack = std::move(seeds);
  std::vector<SimplexId> ids;
  while (!stack.empty()) {
    SimplexId id = stack.back();
    stack.pop_back();
    if (in[id]) continue;
    in[id] = true;
    ids.push_back(id);
    stack.push_back(map.image(id));
  }
  return OpenSimplexSet(map.ambient(), std::move(ids));
}

bool all_admissible(const SimplicialSelfMap& map, const std::map<std::int64_t, std::vector<SimplexId>>& levels) {
  for (const auto& [value, ids] : levels)
    if (value != 0 && !is_admissible(map, OpenSimplexSet(map.ambient(), ids))) return false;
  return true;
}

// Disjoint admissible sets, assigned greedily.
std::vector<OpenSimplexSet> random_disjoint_admissible_sets(const SimplicialSelfMap& map, Rng& rng) {
  const SimplicialComplex& k = map.ambient();
  const std::size_t wanted = 1 + rng.below(4);
  std::vector<OpenSimplexSet> parts;
  OpenSimplexSet used = OpenSimplexSet::none(k);
  for (std::size_t i = 0; i < wanted; ++i) {
    auto next = random_admissible_set(map, rng, &used);
    if (!next) break;
    used = used.united(*next);
    parts.push_back(std::move(*next));
  }
  if (parts.empty()) parts.push_back(OpenSimplexSet::all(k));
  return parts;
}

}  // namespace

SimplicialSelfMap random_complex_and_map(const InstanceBudget& budget, Rng& rng) {
  validate_budget(budget);
  const int n = 1 + static_cast<int>(rng.below(static_cast<std::size_t>(budget.max_vertices)));
  if (n == 1) return SimplicialSelfMap::identity(SimplicialComplex::from_maximal(std::vector<Simplex>{{0}}, 1));

  const std::size_t simplex_count = 1 + rng.below(static_cast<std::size_t>(n) + 1);
  std::vector<Simplex> maximal;
  for (std::size_t i = 0; i < simplex_count; ++i) maximal.push_back(random_simplex(n, budget.max_dimension, rng));

  if (rng.chance(1, 2)) {
    // Close the simplex list under a random permutation, which then is an
    // automorphism of the complex.
    std::vector<Vertex> perm = iota_vertices(n);
    rng.shuffle(perm);
    std::set<Simplex> closed(maximal.begin(), maximal.end());
    std::vector<Simplex> frontier(closed.begin(), closed.end());
    while (!frontier.empty()) {
      std::vector<Simplex> next;
      for (const Simplex& s : frontier) {
        Simplex image;
        for (Vertex v : s) image.push_back(perm[v]);
        std::sort(image.begin(), image.end());
        if (closed.insert(image).second) next.push_back(image);
      }
      frontier = std::move(next);
    }
    std::vector<Simplex> all(closed.begin(), closed.end());
    add_singletons(all, n);
    auto k = SimplicialComplex::from_maximal(all, n);
    if (rng.chance(3, 4)) return SimplicialSelfMap::validate(k, perm);
    for (int attempt = 0; attempt < kMapAttempts; ++attempt)
      if (auto map = try_map(k, candidate_images(k, rng))) return *map;
    return SimplicialSelfMap::validate(k, perm);
  }

  add_singletons(maximal, n);
  auto k = SimplicialComplex::from_maximal(maximal, n);
  for (int attempt = 0; attempt < kMapAttempts; ++attempt)
    if (auto map = try_map(k, candidate_images(k, rng))) return *map;
  return vertex_transitive_fallback(n, rng);
}

std::optional<OpenSimplexSet> random_admissible_set(const SimplicialSelfMap& map, Rng& rng,
                                                    const OpenSimplexSet* avoid) {
  const SimplicialComplex& k = map.ambient();
  const OpenSimplexSet blocked = avoid ? *avoid : OpenSimplexSet::none(k);
  const std::vector<OpenSimplexSet> orbits = simplex_orbits(map);
  std::vector<SimplexId> free_ids;
  for (SimplexId id = 0; id < k.size(); ++id)
    if (!blocked.contains(id)) free_ids.push_back(id);
  if (free_ids.empty()) return std::nullopt;

  for (int attempt = 0; attempt < 30; ++attempt) {
    OpenSimplexSet candidate;
    switch (rng.below(4)) {
      case 0: {
        const std::size_t p = 1 + rng.below(3);
        std::vector<const OpenSimplexSet*> chosen;
        for (const OpenSimplexSet& orbit : orbits)
          if (orbit.disjoint(blocked) && rng.chance(p, 4)) chosen.push_back(&orbit);
        candidate = union_of(k, chosen);
        break;
      }
      case 1: {
        std::vector<SimplexId> seeds;
        const std::size_t count = 1 + rng.below(3);
        for (std::size_t i = 0; i < count; ++i) seeds.push_back(free_ids[rng.below(free_ids.size())]);
        candidate = forward_closure(map, std::move(seeds));
        break;
      }
      case 2:
        candidate = OpenSimplexSet::all(k).minus(random_invariant_subcomplex(map, rng)).minus(blocked);
        break;
      default:
        candidate = random_invariant_subcomplex(map, rng).minus(blocked);
        break;
    }
    if (!candidate.empty() && candidate.disjoint(blocked) && is_admissible(map, candidate)) return candidate;
  }
  return std::nullopt;
}

OpenSimplexSet random_invariant_set(const SimplicialSelfMap& map, Rng& rng) {
  if (auto set = random_admissible_set(map, rng)) return *set;
  return OpenSimplexSet::all(map.ambient());
}

OpenSimplexSet random_invariant_subcomplex(const SimplicialSelfMap& map, Rng& rng) {
  const SimplicialComplex& k = map.ambient();
  std::vector<SimplexId> seeds;
  const std::size_t count = 1 + rng.below(2);
  for (std::size_t i = 0; i < count; ++i) seeds.push_back(static_cast<SimplexId>(rng.below(k.size())));
  OpenSimplexSet a = closure(OpenSimplexSet(k, std::move(seeds)));
  for (;;) {
    std::vector<SimplexId> ids(a.members().begin(), a.members().end());
    for (SimplexId id : a.members()) ids.push_back(map.image(id));
    OpenSimplexSet next = closure(OpenSimplexSet(k, std::move(ids)));
    if (next == a) return a;
    a = std::move(next);
  }
}

OpenSimplexSet random_subset(const SimplicialComplex& complex, Rng& rng) {
  const std::size_t p = rng.below(5);
  std::vector<SimplexId> ids;
  for (SimplexId id = 0; id < complex.size(); ++id)
    if (rng.chance(p, 4)) ids.push_back(id);
  return OpenSimplexSet(complex, std::move(ids));
}

ConstructibleSheaf random_compatible_sheaf(const SimplicialSelfMap& map, Rng& rng) {
  const SimplicialComplex& k = map.ambient();
  for (int attempt = 0; attempt < 10; ++attempt) {
    std::vector<OpenSimplexSet> supports = random_disjoint_admissible_sets(map, rng);
    std::vector<int> ranks;
    for (std::size_t i = 0; i < supports.size(); ++i) ranks.push_back(rng.between(0, 5));

    auto levels_for = [&](const std::vector<int>& r) {
      std::map<std::int64_t, std::vector<SimplexId>> levels;
      for (std::size_t i = 0; i < supports.size(); ++i)
        for (SimplexId id : supports[i].members()) levels[r[i]].push_back(id);
      return levels;
    };
    if (!all_admissible(map, levels_for(ranks))) {
      // Distinct positive ranks make every level set a single support.
      if (supports.size() > 5) continue;
      std::vector<int> distinct{1, 2, 3, 4, 5};
      rng.shuffle(distinct);
      ranks.assign(distinct.begin(), distinct.begin() + static_cast<std::ptrdiff_t>(supports.size()));
    }
    std::vector<SheafPiece> pieces;
    for (std::size_t i = 0; i < supports.size(); ++i) pieces.push_back({supports[i], ranks[i], ""});
    return ConstructibleSheaf::validate(k, std::move(pieces));
  }
  return ConstructibleSheaf::validate(k, {{OpenSimplexSet::all(k), rng.between(1, 5), ""}});
}

ConstructibleFunction random_function(const SimplicialSelfMap& map, Rng& rng) {
  const SimplicialComplex& k = map.ambient();
  for (int attempt = 0; attempt < 10; ++attempt) {
    std::vector<OpenSimplexSet> supports = random_disjoint_admissible_sets(map, rng);
    std::vector<std::int64_t> values;
    for (std::size_t i = 0; i < supports.size(); ++i) values.push_back(rng.between(-5, 5));

    auto levels_for = [&](const std::vector<std::int64_t>& v) {
      std::map<std::int64_t, std::vector<SimplexId>> levels;
      for (std::size_t i = 0; i < supports.size(); ++i)
        for (SimplexId id : supports[i].members()) levels[v[i]].push_back(id);
      return levels;
    };
    if (!all_admissible(map, levels_for(values))) {
      std::vector<std::int64_t> distinct{-5, -4, -3, -2, -1, 1, 2, 3, 4, 5};
      rng.shuffle(distinct);
      values.assign(distinct.begin(), distinct.begin() + static_cast<std::ptrdiff_t>(supports.size()));
    }
    std::vector<std::int64_t> pointwise(k.size(), 0);
    for (std::size_t i = 0; i < supports.size(); ++i)
      for (SimplexId id : supports[i].members()) pointwise[id] = values[i];
    return ConstructibleFunction::from_values(k, pointwise);
  }
  return ConstructibleFunction::from_values(k, std::vector<std::int64_t>(k.size(), rng.between(-5, 5)));
}

Instance random_instance(const InstanceBudget& budget, std::uint64_t seed) {
  Rng rng(seed);
  Instance inst;
  inst.map = random_complex_and_map(budget, rng);
  inst.complex = inst.map.ambient();
  inst.sets.emplace("U", random_invariant_set(inst.map, rng));
  inst.sheaf = random_compatible_sheaf(inst.map, rng);
  inst.function = random_function(inst.map, rng);
  return inst;
}

Instance figure_eight_swap() {
  const std::vector<Simplex> maximal{{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}};
  Instance inst;
  inst.complex = SimplicialComplex::from_maximal(maximal, 5);
  inst.map = SimplicialSelfMap::validate(inst.complex, {0, 3, 4, 1, 2});
  inst.sets.emplace("X", OpenSimplexSet::all(inst.complex));
  inst.sheaf = ConstructibleSheaf::validate(inst.complex, {{OpenSimplexSet::all(inst.complex), 1, "X"}});
  return inst;
}

Instance random_wedge_instance(const InstanceBudget& budget, Rng& rng) {
  Instance inst;
  if (rng.chance(1, 4)) {
    InstanceBudget graph = budget;
    graph.max_dimension = std::min(budget.max_dimension, 1);
    inst.map = random_complex_and_map(graph, rng);
  } else {
    // Summands share vertex 0. A circle summand is a cycle 0, v1, ..., v_{L-1};
    // a sphere summand is the boundary of the tetrahedron 0, a, b, c.
    const bool spheres = budget.max_dimension >= 2 && rng.chance(1, 3);
    const std::size_t summands = 1 + rng.below(spheres ? 2 : 3);
    std::vector<std::vector<Vertex>> members;  // non-wedge vertices per summand
    Vertex next = 1;
    for (std::size_t i = 0; i < summands; ++i) {
      const int extra = spheres ? 3 : 2 + static_cast<int>(rng.below(2));
      std::vector<Vertex> vs;
      for (int j = 0; j < extra; ++j) vs.push_back(next++);
      members.push_back(std::move(vs));
    }
    std::vector<Simplex> maximal;
    for (const auto& vs : members) {
      if (spheres) {
        maximal.push_back({0, vs[0], vs[1]});
        maximal.push_back({0, vs[0], vs[2]});
        maximal.push_back({0, vs[1], vs[2]});
        maximal.push_back({vs[0], vs[1], vs[2]});
      } else {
        maximal.push_back({0, vs.front()});
        for (std::size_t j = 0; j + 1 < vs.size(); ++j) maximal.push_back({vs[j], vs[j + 1]});
        maximal.push_back({0, vs.back()});
      }
    }
    inst.complex = SimplicialComplex::from_maximal(maximal, next);

    // Permute summands of equal size; reflect circles, permute sphere vertices.
    std::vector<Vertex> images = iota_vertices(next);
    std::map<std::size_t, std::vector<std::size_t>> by_size;
    for (std::size_t i = 0; i < members.size(); ++i) by_size[members[i].size()].push_back(i);
    for (auto& [size, group] : by_size) {
      std::vector<std::size_t> targets = group;
      rng.shuffle(targets);
      for (std::size_t g = 0; g < group.size(); ++g) {
        const auto& from = members[group[g]];
        const auto& to = members[targets[g]];
        std::vector<std::size_t> order(size);
        std::iota(order.begin(), order.end(), 0);
        if (spheres)
          rng.shuffle(order);
        else if (rng.chance(1, 2))
          std::reverse(order.begin(), order.end());
        for (std::size_t j = 0; j < size; ++j) images[from[j]] = to[order[j]];
      }
    }
    inst.map = SimplicialSelfMap::validate(inst.complex, images);
  }
  inst.complex = inst.map.ambient();
  inst.sheaf = random_compatible_sheaf(inst.map, rng);
  return inst;
}

}  // namespace lefcalc
