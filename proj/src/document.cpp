#include "lefcalc/document.hpp"

#include <fstream>
#include <sstream>

namespace lefcalc {

using nlohmann::json;

namespace {

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

const json& require(const json& object, const std::string& key, const std::string& path) {
  auto it = object.find(key);
  if (it == object.end()) throw DocumentError(path, "missing field '" + key + "'");
  return *it;
}

std::int64_t as_integer(const json& value, const std::string& path) {
  if (!value.is_number_integer()) throw DocumentError(path, "expected an integer");
  return value.get<std::int64_t>();
}

Simplex as_simplex(const json& value, const std::string& path) {
  if (!value.is_array() || value.empty()) throw DocumentError(path, "expected a nonempty array of vertices");
  Simplex s;
  for (std::size_t i = 0; i < value.size(); ++i) s.push_back(static_cast<Vertex>(as_integer(value[i], child(path, i))));
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i - 1] >= s[i]) throw DocumentError(path, "simplex " + to_string(s) + " is not strictly increasing");
  return s;
}

OpenSimplexSet as_set(const SimplicialComplex& k, const json& value, const std::string& path) {
  if (!value.is_array()) throw DocumentError(path, "expected an array of simplices");
  std::vector<SimplexId> ids;
  for (std::size_t i = 0; i < value.size(); ++i) {
    const Simplex s = as_simplex(value[i], child(path, i));
    auto id = k.find(s);
    if (!id) throw DocumentError(child(path, i), "simplex " + to_string(s) + " is not in the complex");
    ids.push_back(*id);
  }
  return OpenSimplexSet(k, std::move(ids));
}

// A set given either by name (resolved against `sets`) or inline.
std::pair<OpenSimplexSet, std::string> resolve_set(const SimplicialComplex& k,
                                                   const std::map<std::string, OpenSimplexSet>& sets,
                                                   const json& value, const std::string& path) {
  if (value.is_string()) {
    const std::string name = value.get<std::string>();
    auto it = sets.find(name);
    if (it == sets.end()) throw DocumentError(path, "unknown set '" + name + "'");
    return {it->second, name};
  }
  return {as_set(k, value, path), ""};
}

json simplices_json(const OpenSimplexSet& set) {
  json out = json::array();
  for (const Simplex& s : set.simplices()) out.push_back(s);
  return out;
}

}  // namespace

const OpenSimplexSet& Instance::set(const std::string& name) const {
  auto it = sets.find(name);
  if (it == sets.end()) throw Error("instance has no set named '" + name + "'");
  return it->second;
}

bool Instance::operator==(const Instance& other) const {
  return complex == other.complex && map == other.map && sets == other.sets && sheaf == other.sheaf &&
         function == other.function;
}

Instance parse_instance(const json& doc) {
  if (!doc.is_object()) throw DocumentError("", "document must be a JSON object");
  Instance inst;

  const std::int64_t vertex_count = as_integer(require(doc, "vertex_count", ""), "/vertex_count");
  if (vertex_count < 0 || vertex_count > 1'000'000) throw DocumentError("/vertex_count", "out of range");

  const json& maximal = require(doc, "maximal", "");
  if (!maximal.is_array()) throw DocumentError("/maximal", "expected an array of simplices");
  std::vector<Simplex> simplices;
  for (std::size_t i = 0; i < maximal.size(); ++i) {
    Simplex s = as_simplex(maximal[i], child("/maximal", i));
    for (Vertex v : s)
      if (v < 0 || v >= vertex_count)
        throw DocumentError(child("/maximal", i), "vertex " + std::to_string(v) + " out of range");
    simplices.push_back(std::move(s));
  }
  inst.complex = SimplicialComplex::from_maximal(simplices, static_cast<int>(vertex_count));

  if (auto it = doc.find("map"); it != doc.end()) {
    if (!it->is_array()) throw DocumentError("/map", "expected an array of vertex images");
    if (static_cast<std::int64_t>(it->size()) != vertex_count)
      throw DocumentError("/map", "expected " + std::to_string(vertex_count) + " vertex images, got " +
                                      std::to_string(it->size()));
    std::vector<Vertex> images;
    for (std::size_t v = 0; v < it->size(); ++v) {
      const std::int64_t image = as_integer((*it)[v], child("/map", v));
      if (image < 0 || image >= vertex_count)
        throw DocumentError(child("/map", v), "vertex image " + std::to_string(image) + " out of range [0, " +
                                                  std::to_string(vertex_count) + ")");
      images.push_back(static_cast<Vertex>(image));
    }
    try {
      inst.map = SimplicialSelfMap::validate(inst.complex, std::move(images));
    } catch (const Error& e) {
      throw DocumentError("/map", e.what());
    }
  } else {
    inst.map = SimplicialSelfMap::identity(inst.complex);
  }

  if (auto it = doc.find("sets"); it != doc.end()) {
    if (!it->is_object()) throw DocumentError("/sets", "expected an object of named sets");
    for (const auto& [name, value] : it->items())
      inst.sets.emplace(name, as_set(inst.complex, value, child("/sets", name)));
  }

  if (auto it = doc.find("sheaf"); it != doc.end()) {
    if (!it->is_array()) throw DocumentError("/sheaf", "expected an array of pieces");
    std::vector<SheafPiece> pieces;
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string path = child("/sheaf", i);
      const json& entry = (*it)[i];
      if (!entry.is_object()) throw DocumentError(path, "expected an object with 'set' and 'rank'");
      auto [support, name] = resolve_set(inst.complex, inst.sets, require(entry, "set", path), child(path, "set"));
      const std::int64_t rank = as_integer(require(entry, "rank", path), child(path, "rank"));
      if (rank < 0 || rank > 1'000'000) throw DocumentError(child(path, "rank"), "rank out of range");
      pieces.push_back({std::move(support), static_cast<int>(rank), name.empty() ? "#" + std::to_string(i) : name});
    }
    try {
      inst.sheaf = ConstructibleSheaf::validate(inst.complex, std::move(pieces));
    } catch (const Error& e) {
      throw DocumentError("/sheaf", e.what());
    }
  }

  if (auto it = doc.find("function"); it != doc.end()) {
    if (!it->is_array()) throw DocumentError("/function", "expected an array of level entries");
    std::vector<std::int64_t> values(inst.complex.size(), 0);
    std::vector<std::string> origin(inst.complex.size());
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string path = child("/function", i);
      const json& entry = (*it)[i];
      if (!entry.is_object()) throw DocumentError(path, "expected an object with 'value' and 'set'");
      const std::int64_t value = as_integer(require(entry, "value", path), child(path, "value"));
      if (value == 0) throw DocumentError(child(path, "value"), "value 0 is implicit and cannot be listed");
      auto [set, name] = resolve_set(inst.complex, inst.sets, require(entry, "set", path), child(path, "set"));
      for (SimplexId id : set.members()) {
        if (values[id] != 0)
          throw DocumentError(path, "simplex " + to_string(inst.complex.simplex(id)) + " already has value " +
                                        std::to_string(values[id]) + " from " + origin[id]);
        values[id] = value;
        origin[id] = path;
      }
    }
    try {
      inst.function = ConstructibleFunction::from_values(inst.complex, values);
    } catch (const Error& e) {
      throw DocumentError("/function", e.what());
    }
  }
  return inst;
}

Instance parse_instance_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError("", std::string("JSON parse error: ") + e.what());
  }
  return parse_instance(doc);
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open instance file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_instance_text(buffer.str());
  } catch (const DocumentError& e) {
    throw DocumentError(path.string() + ":" + e.path(), std::string(e.what()).substr(e.path().size() + 2));
  }
}

json serialize_instance(const Instance& inst) {
  json doc;
  doc["vertex_count"] = inst.complex.vertex_count();
  doc["maximal"] = inst.complex.maximal_simplices();
  doc["map"] = std::vector<Vertex>(inst.map.vertex_images().begin(), inst.map.vertex_images().end());
  if (!inst.sets.empty()) {
    json sets = json::object();
    for (const auto& [name, set] : inst.sets) sets[name] = simplices_json(set);
    doc["sets"] = std::move(sets);
  }
  if (inst.sheaf) {
    json pieces = json::array();
    for (const SheafPiece& piece : inst.sheaf->pieces()) {
      json entry;
      auto named = inst.sets.find(piece.label);
      if (named != inst.sets.end() && named->second == piece.support)
        entry["set"] = piece.label;
      else
        entry["set"] = simplices_json(piece.support);
      entry["rank"] = piece.rank;
      pieces.push_back(std::move(entry));
    }
    doc["sheaf"] = std::move(pieces);
  }
  if (inst.function) {
    json levels = json::array();
    for (const auto& [value, set] : inst.function->levels())
      levels.push_back(json{{"value", value}, {"set", simplices_json(set)}});
    doc["function"] = std::move(levels);
  }
  return doc;
}

std::string instance_to_text(const Instance& inst) { return serialize_instance(inst).dump(2) + "\n"; }

}  // namespace lefcalc
