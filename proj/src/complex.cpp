#include "lefcalc/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "lefcalc/error.hpp"

namespace lefcalc {

std::string to_string(const Simplex& simplex) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < simplex.size(); ++i) {
    if (i) out << ',';
    out << simplex[i];
  }
  out << ']';
  return out.str();
}

namespace {

bool canonical_less(const Simplex& a, const Simplex& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

struct SimplicialComplex::Data {
  int vertex_count = 0;
  std::vector<Simplex> simplices;
  std::map<Simplex, SimplexId> index;
  std::vector<std::vector<Facet>> facets;
  std::vector<std::vector<SimplexId>> faces;
};

SimplicialComplex::SimplicialComplex() : data_(std::make_shared<const Data>()) {}

SimplicialComplex::SimplicialComplex(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

SimplicialComplex SimplicialComplex::from_maximal(std::span<const Simplex> maximal,
                                                  int vertex_count) {
  if (vertex_count < 0) throw Error("vertex_count must be non-negative");
  std::set<Simplex> all;
  for (std::size_t k = 0; k < maximal.size(); ++k) {
    const Simplex& s = maximal[k];
    if (s.empty()) throw Error("simplex #" + std::to_string(k) + " is empty");
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 0 || s[i] >= vertex_count) {
        throw Error("simplex " + to_string(s) + ": vertex " + std::to_string(s[i]) +
                    " out of range [0, " + std::to_string(vertex_count) + ")");
      }
      if (i > 0 && s[i - 1] >= s[i]) {
        throw Error("simplex " + to_string(s) + " is not strictly increasing");
      }
    }
    if (s.size() > 20) throw Error("simplex " + to_string(s) + " has too many vertices");
    // Enumerate nonempty subsets.
    const std::uint32_t n = static_cast<std::uint32_t>(s.size());
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      Simplex face;
      for (std::uint32_t i = 0; i < n; ++i)
        if (mask & (1u << i)) face.push_back(s[i]);
      all.insert(std::move(face));
    }
  }

  auto data = std::make_shared<Data>();
  data->vertex_count = vertex_count;
  data->simplices.assign(all.begin(), all.end());
  std::sort(data->simplices.begin(), data->simplices.end(), canonical_less);
  for (SimplexId id = 0; id < data->simplices.size(); ++id) data->index.emplace(data->simplices[id], id);

  data->facets.resize(data->simplices.size());
  data->faces.resize(data->simplices.size());
  for (SimplexId id = 0; id < data->simplices.size(); ++id) {
    const Simplex& s = data->simplices[id];
    if (s.size() > 1) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex facet = s;
        facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(i));
        data->facets[id].push_back({data->index.at(facet), (i % 2 == 0) ? 1 : -1});
      }
    }
    const std::uint32_t n = static_cast<std::uint32_t>(s.size());
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
      Simplex face;
      for (std::uint32_t i = 0; i < n; ++i)
        if (mask & (1u << i)) face.push_back(s[i]);
      data->faces[id].push_back(data->index.at(face));
    }
    std::sort(data->faces[id].begin(), data->faces[id].end());
  }
  return SimplicialComplex(std::move(data));
}

int SimplicialComplex::vertex_count() const { return data_->vertex_count; }

std::size_t SimplicialComplex::size() const { return data_->simplices.size(); }

int SimplicialComplex::dimension() const {
  if (data_->simplices.empty()) return -1;
  return static_cast<int>(data_->simplices.back().size()) - 1;
}

const Simplex& SimplicialComplex::simplex(SimplexId id) const { return data_->simplices.at(id); }

int SimplicialComplex::dim(SimplexId id) const {
  return static_cast<int>(data_->simplices.at(id).size()) - 1;
}

std::optional<SimplexId> SimplicialComplex::find(const Simplex& simplex) const {
  auto it = data_->index.find(simplex);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

SimplexId SimplicialComplex::id_of(const Simplex& simplex) const {
  auto id = find(simplex);
  if (!id) throw Error("simplex " + to_string(simplex) + " is not in the complex");
  return *id;
}

std::span<const Facet> SimplicialComplex::facets(SimplexId id) const { return data_->facets.at(id); }

std::span<const SimplexId> SimplicialComplex::faces(SimplexId id) const { return data_->faces.at(id); }

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  std::vector<bool> is_face(size(), false);
  for (SimplexId id = 0; id < size(); ++id)
    for (SimplexId f : faces(id)) is_face[f] = true;
  std::vector<Simplex> result;
  for (SimplexId id = 0; id < size(); ++id)
    if (!is_face[id]) result.push_back(simplex(id));
  std::sort(result.begin(), result.end());
  return result;
}

bool SimplicialComplex::operator==(const SimplicialComplex& other) const {
  if (data_ == other.data_) return true;
  return data_->vertex_count == other.data_->vertex_count &&
         data_->simplices == other.data_->simplices;
}

// --- OpenSimplexSet ---------------------------------------------------------

OpenSimplexSet::OpenSimplexSet(SimplicialComplex ambient, std::vector<SimplexId> members)
    : ambient_(std::move(ambient)), members_(std::move(members)), mask_(ambient_.size(), false) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (SimplexId id : members_) {
    if (id >= ambient_.size()) {
      throw Error("simplex id " + std::to_string(id) + " out of range for complex of size " +
                  std::to_string(ambient_.size()));
    }
    mask_[id] = true;
  }
}

OpenSimplexSet OpenSimplexSet::all(const SimplicialComplex& ambient) {
  std::vector<SimplexId> ids(ambient.size());
  std::iota(ids.begin(), ids.end(), SimplexId{0});
  return OpenSimplexSet(ambient, std::move(ids));
}

OpenSimplexSet OpenSimplexSet::none(const SimplicialComplex& ambient) { return OpenSimplexSet(ambient, {}); }

OpenSimplexSet OpenSimplexSet::from_simplices(const SimplicialComplex& ambient,
                                              std::span<const Simplex> simplices) {
  std::vector<SimplexId> ids;
  ids.reserve(simplices.size());
  for (const Simplex& s : simplices) ids.push_back(ambient.id_of(s));
  return OpenSimplexSet(ambient, std::move(ids));
}

std::vector<Simplex> OpenSimplexSet::simplices() const {
  std::vector<Simplex> out;
  out.reserve(members_.size());
  for (SimplexId id : members_) out.push_back(ambient_.simplex(id));
  return out;
}

void OpenSimplexSet::require_same_ambient(const OpenSimplexSet& other) const {
  if (!(ambient_ == other.ambient_)) throw Error("open simplex sets live in different complexes");
}

OpenSimplexSet OpenSimplexSet::united(const OpenSimplexSet& other) const {
  require_same_ambient(other);
  std::vector<SimplexId> out;
  std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                 std::back_inserter(out));
  return OpenSimplexSet(ambient_, std::move(out));
}

OpenSimplexSet OpenSimplexSet::intersected(const OpenSimplexSet& other) const {
  require_same_ambient(other);
  std::vector<SimplexId> out;
  std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::back_inserter(out));
  return OpenSimplexSet(ambient_, std::move(out));
}

OpenSimplexSet OpenSimplexSet::minus(const OpenSimplexSet& other) const {
  require_same_ambient(other);
  std::vector<SimplexId> out;
  std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                      other.members_.end(), std::back_inserter(out));
  return OpenSimplexSet(ambient_, std::move(out));
}

bool OpenSimplexSet::disjoint(const OpenSimplexSet& other) const {
  require_same_ambient(other);
  for (SimplexId id : members_)
    if (other.contains(id)) return false;
  return true;
}

bool OpenSimplexSet::operator==(const OpenSimplexSet& other) const {
  return ambient_ == other.ambient_ && members_ == other.members_;
}

std::string to_string(const OpenSimplexSet& set) {
  std::string out = "{";
  bool first = true;
  for (SimplexId id : set.members()) {
    if (!first) out += ' ';
    first = false;
    out += to_string(set.ambient().simplex(id));
  }
  return out + "}";
}

// --- queries ----------------------------------------------------------------

OpenSimplexSet closure(const OpenSimplexSet& set) {
  const SimplicialComplex& k = set.ambient();
  std::vector<bool> in(k.size(), false);
  for (SimplexId id : set.members()) {
    in[id] = true;
    for (SimplexId f : k.faces(id)) in[f] = true;
  }
  std::vector<SimplexId> ids;
  for (SimplexId id = 0; id < k.size(); ++id)
    if (in[id]) ids.push_back(id);
  return OpenSimplexSet(k, std::move(ids));
}

OpenSimplexSet frontier(const OpenSimplexSet& set) { return closure(set).minus(set); }

ClosureAndFrontier closure_and_frontier(const OpenSimplexSet& set) {
  OpenSimplexSet cl = closure(set);
  OpenSimplexSet fr = cl.minus(set);
  return {std::move(cl), std::move(fr)};
}

bool is_face_closed(const OpenSimplexSet& set) {
  for (SimplexId id : set.members())
    for (SimplexId f : set.ambient().faces(id))
      if (!set.contains(f)) return false;
  return true;
}

std::optional<LocalCompactnessViolation> local_compactness_violation(const OpenSimplexSet& set) {
  const OpenSimplexSet fr = frontier(set);
  for (SimplexId id : fr.members())
    for (SimplexId f : set.ambient().faces(id))
      if (!fr.contains(f)) return LocalCompactnessViolation{id, f};
  return std::nullopt;
}

bool is_locally_compact(const OpenSimplexSet& set) { return !local_compactness_violation(set); }

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<OpenSimplexSet> connected_components(const OpenSimplexSet& set) {
  const SimplicialComplex& k = set.ambient();
  DisjointSets classes(k.size());
  for (SimplexId id : set.members())
    for (SimplexId f : k.faces(id))
      if (set.contains(f)) classes.unite(id, f);

  // Roots are the smallest member of each class, so ordering by root orders
  // components by their smallest member.
  std::map<std::size_t, std::vector<SimplexId>> groups;
  for (SimplexId id : set.members()) groups[classes.find(id)].push_back(id);
  std::vector<OpenSimplexSet> out;
  out.reserve(groups.size());
  for (auto& [root, ids] : groups) out.emplace_back(k, std::move(ids));
  return out;
}

std::int64_t euler_cc(const OpenSimplexSet& set) {
  std::int64_t chi = 0;
  for (SimplexId id : set.members()) chi += (set.ambient().dim(id) % 2 == 0) ? 1 : -1;
  return chi;
}

OpenSimplexSet skeleton_layer(const OpenSimplexSet& set, int dimension) {
  if (dimension < 0) throw Error("skeleton layer dimension must be non-negative");
  std::vector<SimplexId> ids;
  for (SimplexId id : set.members())
    if (set.ambient().dim(id) == dimension) ids.push_back(id);
  return OpenSimplexSet(set.ambient(), std::move(ids));
}

}  // namespace lefcalc
