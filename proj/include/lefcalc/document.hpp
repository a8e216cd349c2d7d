#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "lefcalc/complex.hpp"
#include "lefcalc/constructible_function.hpp"
#include "lefcalc/error.hpp"
#include "lefcalc/sheaf.hpp"
#include "lefcalc/simplicial_map.hpp"

namespace lefcalc {

/// Parse or validation failure, tagged with the JSON pointer of the
/// offending field.
class DocumentError : public Error {
 public:
  DocumentError(std::string path, const std::string& message)
      : Error(path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// A validated instance document.
///
/// JSON layout:
///   vertex_count  integer
///   maximal       array of simplices (face closure is applied)
///   map           vertex images; identity when absent
///   sets          object: name -> array of simplices
///   sheaf         array of {"set": name or array of simplices, "rank": n}
///   function      array of {"value": n, "set": name or array}; entries with
///                 equal values are merged
struct Instance {
  SimplicialComplex complex;
  SimplicialSelfMap map;
  std::map<std::string, OpenSimplexSet> sets;
  std::optional<ConstructibleSheaf> sheaf;
  std::optional<ConstructibleFunction> function;

  /// Throws Error when no set has this name.
  const OpenSimplexSet& set(const std::string& name) const;
  bool has_set(const std::string& name) const { return sets.count(name) != 0; }

  bool operator==(const Instance& other) const;
};

Instance parse_instance(const nlohmann::json& document);
/// JSON syntax errors are reported with line and column.
Instance parse_instance_text(std::string_view text);
Instance load_instance(const std::filesystem::path& path);

nlohmann::json serialize_instance(const Instance& instance);
/// Pretty-printed, newline-terminated.
std::string instance_to_text(const Instance& instance);

}  // namespace lefcalc
