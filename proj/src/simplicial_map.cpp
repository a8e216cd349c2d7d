#include "lefcalc/simplicial_map.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "lefcalc/error.hpp"

namespace lefcalc {

namespace {

// Sign of the permutation sorting `seq`; 0 if `seq` has repeated entries.
int sorting_sign(std::vector<Vertex> seq) {
  int sign = 1;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    for (std::size_t j = i; j > 0 && seq[j - 1] >= seq[j]; --j) {
      if (seq[j - 1] == seq[j]) return 0;
      std::swap(seq[j - 1], seq[j]);
      sign = -sign;
    }
  }
  return sign;
}

}  // namespace

SimplicialSelfMap SimplicialSelfMap::validate(SimplicialComplex complex,
                                              std::vector<Vertex> vertex_images) {
  const int n = complex.vertex_count();
  if (static_cast<int>(vertex_images.size()) != n) {
    throw Error("map has " + std::to_string(vertex_images.size()) + " vertex images, expected " +
                std::to_string(n));
  }
  for (int v = 0; v < n; ++v) {
    if (vertex_images[v] < 0 || vertex_images[v] >= n) {
      throw Error("vertex " + std::to_string(v) + " maps to " + std::to_string(vertex_images[v]) +
                  ", out of range [0, " + std::to_string(n) + ")");
    }
  }

  SimplicialSelfMap map;
  map.ambient_ = std::move(complex);
  map.images_ = std::move(vertex_images);
  const SimplicialComplex& k = map.ambient_;
  map.image_.resize(k.size());
  map.sign_.resize(k.size());
  for (SimplexId id = 0; id < k.size(); ++id) {
    std::vector<Vertex> seq;
    for (Vertex v : k.simplex(id)) seq.push_back(map.images_[v]);
    map.sign_[id] = sorting_sign(seq);
    Simplex target = seq;
    std::sort(target.begin(), target.end());
    target.erase(std::unique(target.begin(), target.end()), target.end());
    auto found = k.find(target);
    if (!found) {
      throw Error("map is not simplicial: " + to_string(k.simplex(id)) + " maps to " +
                  to_string(target) + ", which is not a simplex");
    }
    map.image_[id] = *found;
  }
  return map;
}

SimplicialSelfMap SimplicialSelfMap::identity(SimplicialComplex complex) {
  std::vector<Vertex> images(static_cast<std::size_t>(complex.vertex_count()));
  std::iota(images.begin(), images.end(), 0);
  return validate(std::move(complex), std::move(images));
}

std::optional<ChainImage> SimplicialSelfMap::chain_coefficient(SimplexId id) const {
  const int s = sign_.at(id);
  if (s == 0) return std::nullopt;
  return ChainImage{image_[id], s * sign_flip_};
}

SimplicialSelfMap SimplicialSelfMap::after(const SimplicialSelfMap& inner) const {
  if (!(ambient_ == inner.ambient_)) throw Error("cannot compose maps on different complexes");
  std::vector<Vertex> images(images_.size());
  for (std::size_t v = 0; v < images.size(); ++v) images[v] = images_[inner.images_[v]];
  return validate(ambient_, std::move(images));
}

SimplicialSelfMap SimplicialSelfMap::with_flipped_chain_sign() const {
  SimplicialSelfMap copy = *this;
  copy.sign_flip_ = -sign_flip_;
  return copy;
}

bool is_pair_invariant(const SimplicialSelfMap& map, const OpenSimplexSet& set) {
  if (!(map.ambient() == set.ambient())) throw Error("map and set live on different complexes");
  const auto [cl, fr] = closure_and_frontier(set);
  for (SimplexId id : set.members())
    if (!cl.contains(map.image(id))) return false;
  for (SimplexId id : fr.members())
    if (!fr.contains(map.image(id))) return false;
  return true;
}

std::vector<OpenSimplexSet> simplex_orbits(const SimplicialSelfMap& map) {
  const SimplicialComplex& k = map.ambient();
  std::vector<std::size_t> parent(k.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (SimplexId id = 0; id < k.size(); ++id) {
    std::size_t a = find(id), b = find(map.image(id));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<std::size_t, std::vector<SimplexId>> groups;
  for (SimplexId id = 0; id < k.size(); ++id) groups[find(id)].push_back(id);
  std::vector<OpenSimplexSet> out;
  for (auto& [root, ids] : groups) out.emplace_back(k, std::move(ids));
  return out;
}

}  // namespace lefcalc
