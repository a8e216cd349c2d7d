#include "lefcalc/verify.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <utility>

#include "lefcalc/calculus.hpp"
#include "lefcalc/error.hpp"
#include "lefcalc/homology.hpp"
#include "lefcalc/lefschetz.hpp"
#include "lefcalc/sheaf.hpp"

namespace lefcalc {

namespace {

constexpr std::array<std::pair<Property, std::string_view>, 11> kNames{{
    {Property::hopf, "hopf"},
    {Property::additivity, "additivity"},
    {Property::dim_additivity, "dim-additivity"},
    {Property::representation, "representation"},
    {Property::barrow, "barrow"},
    {Property::well_defined, "well-defined"},
    {Property::cofibration, "cofibration"},
    {Property::vanishing, "vanishing"},
    {Property::scaling, "scaling"},
    {Property::wedge, "wedge"},
    {Property::identity, "identity"},
}};

CaseOutcome compare(std::int64_t lhs, std::int64_t rhs, std::string detail = {}) {
  return {lhs == rhs, lhs, rhs, std::move(detail)};
}

// Start from a passing outcome and keep the first mismatch.
void also(CaseOutcome& outcome, std::int64_t lhs, std::int64_t rhs, const std::string& what) {
  if (!outcome.pass || lhs == rhs) return;
  outcome = {false, lhs, rhs, what};
}

Instance base_instance(const InstanceBudget& budget, Rng& rng) {
  Instance inst;
  inst.map = random_complex_and_map(budget, rng);
  inst.complex = inst.map.ambient();
  return inst;
}

std::vector<OpenSimplexSet> nonempty_layers(const OpenSimplexSet& set) {
  std::vector<OpenSimplexSet> layers;
  for (int p = 0; p <= set.ambient().dimension(); ++p) {
    OpenSimplexSet layer = skeleton_layer(set, p);
    if (!layer.empty()) layers.push_back(std::move(layer));
  }
  return layers;
}

ConstructibleSheaf restrict_sheaf(const ConstructibleSheaf& sheaf, const OpenSimplexSet& region) {
  std::vector<SheafPiece> pieces;
  for (const SheafPiece& piece : sheaf.pieces()) {
    OpenSimplexSet part = piece.support.intersected(region);
    if (!part.empty()) pieces.push_back({std::move(part), piece.rank, piece.label});
  }
  return ConstructibleSheaf::validate(sheaf.ambient(), std::move(pieces));
}

bool restrictions_compatible(const SimplicialSelfMap& map, const ConstructibleSheaf& sheaf,
                             const OpenSimplexSet& a) {
  const OpenSimplexSet rest = OpenSimplexSet::all(map.ambient()).minus(a);
  for (const SheafPiece& piece : sheaf.pieces()) {
    for (const OpenSimplexSet& part : {piece.support.intersected(a), piece.support.intersected(rest)})
      if (!part.empty() && !is_admissible(map, part)) return false;
  }
  return true;
}

// Splits every level set along the orbits of the map and then into connected
// components, as far as the parts stay admissible.
Representation split_representation(const SimplicialSelfMap& map, const ConstructibleFunction& h) {
  const std::vector<OpenSimplexSet> orbits = simplex_orbits(map);
  Representation rep;
  for (const auto& [value, level] : h.levels()) {
    std::vector<OpenSimplexSet> parts;
    for (const OpenSimplexSet& orbit : orbits) {
      OpenSimplexSet part = level.intersected(orbit);
      if (!part.empty()) parts.push_back(std::move(part));
    }
    bool ok = true;
    for (const OpenSimplexSet& part : parts) ok = ok && is_admissible(map, part);
    if (!ok) parts = {level};

    for (const OpenSimplexSet& part : parts) {
      std::vector<OpenSimplexSet> components = connected_components(part);
      bool split = components.size() > 1;
      for (const OpenSimplexSet& c : components) split = split && is_admissible(map, c);
      if (!split) components = {part};
      for (OpenSimplexSet& c : components) rep.terms.push_back({value, std::move(c)});
    }
  }
  return rep;
}

// 1_S + sum_j (j - 1) 1_{X_j} where S is the support of h.
std::optional<Representation> overlapping_representation(const SimplicialSelfMap& map, const ConstructibleFunction& h) {
  OpenSimplexSet support = OpenSimplexSet::none(h.ambient());
  for (const auto& [value, level] : h.levels()) support = support.united(level);
  if (support.empty() || !is_admissible(map, support)) return std::nullopt;
  Representation rep;
  rep.terms.push_back({1, support});
  for (const auto& [value, level] : h.levels())
    if (value != 1) rep.terms.push_back({value - 1, level});
  return rep;
}

CaseOutcome check_hopf(const Instance& inst, Mutation mutation) {
  const OpenSimplexSet& u = inst.set("U");
  const SimplicialSelfMap combinatorial =
      mutation == Mutation::flip_chain_sign ? inst.map.with_flipped_chain_sign() : inst.map;
  return compare(lambda_c(combinatorial, u), l_hom(inst.map, u), "lambda_c(g, U) vs l_hom(g, U)");
}

CaseOutcome check_additivity(const Instance& inst) {
  const OpenSimplexSet& u = inst.set("U");
  const OpenSimplexSet& v = inst.set("V");
  if (!u.disjoint(v)) throw Error("U and V are not disjoint");
  const OpenSimplexSet both = u.united(v);
  CaseOutcome out = compare(lambda_c(inst.map, both), lambda_c(inst.map, u) + lambda_c(inst.map, v),
                            "lambda_c(U + V) vs lambda_c(U) + lambda_c(V)");
  if (is_admissible(inst.map, u) && is_admissible(inst.map, v) && is_admissible(inst.map, both))
    also(out, l_hom(inst.map, both), l_hom(inst.map, u) + l_hom(inst.map, v), "l_hom(U + V) vs l_hom(U) + l_hom(V)");
  return out;
}

CaseOutcome check_dim_additivity(const Instance& inst) {
  const OpenSimplexSet& d = inst.set("D");
  std::int64_t sum = 0;
  for (const OpenSimplexSet& layer : nonempty_layers(d)) sum += l_hom(inst.map, layer);
  return compare(l_hom(inst.map, d), sum, "l_hom(D) vs sum of l_hom over skeleton layers");
}

CaseOutcome check_representation(const Instance& inst) {
  if (!inst.sheaf) throw Error("instance has no sheaf");
  const ConstructibleSheaf& f = *inst.sheaf;
  const std::int64_t lhs = sheaf_lefschetz(inst.map, f);
  const ConstructibleFunction h = associated_function(f);
  CaseOutcome out = compare(lhs, integrate(inst.map, canonical_representation(h)),
                            "sheaf_lefschetz(F) vs integral of associated function");
  const ConstructibleSheaf back = associated_sheaf(h, Part::positive);
  also(out, sheaf_lefschetz(inst.map, back), lhs, "sheaf_lefschetz(associated_sheaf(h)) vs sheaf_lefschetz(F)");
  if (out.pass && !(associated_function(back) == h)) out = {false, lhs, lhs, "associated function round trip differs"};
  return out;
}

CaseOutcome check_barrow(const Instance& inst) {
  if (!inst.function) throw Error("instance has no function");
  return compare(barrow(inst.map, *inst.function), integrate(inst.map, canonical_representation(*inst.function)),
                 "barrow(h) vs integral of canonical representation");
}

CaseOutcome check_well_defined(const Instance& inst) {
  if (!inst.function) throw Error("instance has no function");
  const ConstructibleFunction& h = *inst.function;
  const Representation merged = canonical_representation(h);
  const Representation split = split_representation(inst.map, h);
  if (split.evaluate(h.ambient()) != h.values()) throw InternalError("split representation changes the function");
  CaseOutcome out = compare(integrate(inst.map, merged), integrate(inst.map, split),
                            "merged-value vs split-piece representation");
  if (auto overlap = overlapping_representation(inst.map, h)) {
    if (overlap->evaluate(h.ambient()) != h.values())
      throw InternalError("overlapping representation changes the function");
    also(out, integrate(inst.map, merged), integrate(inst.map, *overlap), "merged-value vs overlapping representation");
  }
  return out;
}

CaseOutcome check_cofibration(const Instance& inst) {
  if (!inst.sheaf) throw Error("instance has no sheaf");
  const OpenSimplexSet& a = inst.set("A");
  if (!is_face_closed(a)) throw Error("A is not a subcomplex");
  if (!is_pair_invariant(inst.map, a)) throw Error("A is not invariant");
  const OpenSimplexSet rest = OpenSimplexSet::all(inst.complex).minus(a);
  const std::int64_t whole = sheaf_lefschetz(inst.map, *inst.sheaf);
  const std::int64_t open = sheaf_lefschetz(inst.map, restrict_sheaf(*inst.sheaf, rest));
  const std::int64_t closed = sheaf_lefschetz(inst.map, restrict_sheaf(*inst.sheaf, a));
  CaseOutcome out = compare(whole, open + closed, "L_c(X, F) vs L_c(X - A, F) + L_c(A, F)");
  if (is_admissible(inst.map, rest)) {
    const OpenSimplexSet all = OpenSimplexSet::all(inst.complex);
    also(out, l_hom(inst.map, all), l_hom(inst.map, rest) + l_hom(inst.map, a), "L_c(X) vs L_c(X - A) + L_c(A)");
  }
  return out;
}

CaseOutcome check_vanishing(const Instance& inst) {
  const OpenSimplexSet& u = inst.set("U");
  const CompactSupportComplex c = compact_support_complex(inst.map, u);
  const HomologySummary h = homology_traces(c);
  const int ambient_dim = std::max(inst.complex.dimension(), 0);
  int top = -1;
  for (SimplexId id : u.members()) top = std::max(top, inst.complex.dim(id));

  std::int64_t nonzero = c.top_degree() > ambient_dim ? 1 : 0;
  for (int p = top + 1; p <= ambient_dim + 3; ++p) nonzero += std::abs(h.betti_at(p)) + std::abs(h.trace_at(p));
  return compare(nonzero, 0, "homology above the top dimension of U");
}

CaseOutcome check_scaling(const Instance& inst) {
  const OpenSimplexSet& u = inst.set("U");
  const std::int64_t lambda = lambda_c(inst.map, u);
  CaseOutcome out{true, 0, 0, {}};
  for (int n : {0, 1, 2, 5}) {
    const ConstructibleSheaf f = ConstructibleSheaf::validate(inst.complex, {{u, n, "U"}});
    const std::int64_t l = sheaf_lefschetz(inst.map, f);
    if (out.pass) out = {true, l, n * lambda, {}};
    also(out, l, n * lambda, "rank-" + std::to_string(n) + " constant sheaf vs n * lambda_c");
  }
  return out;
}

CaseOutcome check_identity(const Instance& inst) {
  const OpenSimplexSet& u = inst.set("U");
  return compare(lambda_c(SimplicialSelfMap::identity(inst.complex), u), euler_cc(u), "lambda_c(id, U) vs euler_cc(U)");
}

}  // namespace

std::string_view property_name(Property property) {
  for (const auto& [p, name] : kNames)
    if (p == property) return name;
  throw InternalError("unnamed property");
}

Property parse_property(std::string_view name) {
  for (const auto& [p, n] : kNames)
    if (n == name) return p;
  throw Error("unknown property '" + std::string(name) + "'");
}

const std::vector<Property>& all_properties() {
  static const std::vector<Property> properties = [] {
    std::vector<Property> out;
    for (const auto& [p, name] : kNames) out.push_back(p);
    return out;
  }();
  return properties;
}

std::vector<CaseRecord> PropertyReport::failures() const {
  std::vector<CaseRecord> out;
  for (const CaseRecord& r : cases)
    if (!r.outcome.pass) out.push_back(r);
  return out;
}

bool PropertyReport::passed() const { return cases_run > 0 && failures().empty(); }

std::optional<Instance> build_case(Property property, const InstanceBudget& budget, Rng& rng, std::size_t index) {
  Instance inst;
  switch (property) {
    case Property::hopf:
    case Property::vanishing:
    case Property::scaling:
      inst = base_instance(budget, rng);
      inst.sets.emplace("U", random_invariant_set(inst.map, rng));
      return inst;

    case Property::identity:
      inst = base_instance(budget, rng);
      inst.map = SimplicialSelfMap::identity(inst.complex);
      inst.sets.emplace("U", random_subset(inst.complex, rng));
      return inst;

    case Property::additivity: {
      inst = base_instance(budget, rng);
      OpenSimplexSet u = random_invariant_set(inst.map, rng);
      std::optional<OpenSimplexSet> v = random_admissible_set(inst.map, rng, &u);
      if (!v) v = random_subset(inst.complex, rng).minus(u);
      inst.sets.emplace("U", std::move(u));
      inst.sets.emplace("V", std::move(*v));
      return inst;
    }

    case Property::dim_additivity: {
      inst = base_instance(budget, rng);
      for (int attempt = 0; attempt < 30; ++attempt) {
        OpenSimplexSet d = random_invariant_set(inst.map, rng);
        bool layers_ok = true;
        for (const OpenSimplexSet& layer : nonempty_layers(d)) layers_ok = layers_ok && is_pair_invariant(inst.map, layer);
        if (layers_ok) {
          inst.sets.emplace("D", std::move(d));
          return inst;
        }
      }
      inst.sets.emplace("D", skeleton_layer(OpenSimplexSet::all(inst.complex), 0));
      return inst;
    }

    case Property::representation:
      inst = base_instance(budget, rng);
      inst.sheaf = random_compatible_sheaf(inst.map, rng);
      return inst;

    case Property::barrow:
    case Property::well_defined:
      inst = base_instance(budget, rng);
      inst.function = random_function(inst.map, rng);
      return inst;

    case Property::cofibration:
      for (int base = 0; base < 10; ++base) {
        inst = base_instance(budget, rng);
        for (int attempt = 0; attempt < 10; ++attempt) {
          OpenSimplexSet a = random_invariant_subcomplex(inst.map, rng);
          ConstructibleSheaf f = random_compatible_sheaf(inst.map, rng);
          if (restrictions_compatible(inst.map, f, a)) {
            inst.sets.emplace("A", std::move(a));
            inst.sheaf = std::move(f);
            return inst;
          }
        }
      }
      return std::nullopt;

    case Property::wedge:
      if (index == 0) return figure_eight_swap();
      return random_wedge_instance(budget, rng);
  }
  return std::nullopt;
}

CaseOutcome check_case(Property property, const Instance& inst, Mutation mutation) {
  try {
    switch (property) {
      case Property::hopf: return check_hopf(inst, mutation);
      case Property::additivity: return check_additivity(inst);
      case Property::dim_additivity: return check_dim_additivity(inst);
      case Property::representation:
      case Property::wedge: return check_representation(inst);
      case Property::barrow: return check_barrow(inst);
      case Property::well_defined: return check_well_defined(inst);
      case Property::cofibration: return check_cofibration(inst);
      case Property::vanishing: return check_vanishing(inst);
      case Property::scaling: return check_scaling(inst);
      case Property::identity: return check_identity(inst);
    }
  } catch (const std::exception& e) {
    return {false, 0, 0, std::string("error: ") + e.what()};
  }
  return {false, 0, 0, "unhandled property"};
}

PropertyReport run_property_suite(Property property, const InstanceBudget& budget, Mutation mutation) {
  validate_budget(budget);
  const auto start = std::chrono::steady_clock::now();
  PropertyReport report;
  report.property = property;
  for (std::size_t i = 0; i < budget.case_count; ++i) {
    Rng rng(case_seed(budget.seed, i));
    std::optional<Instance> inst = build_case(property, budget, rng, i);
    if (!inst) {
      ++report.skipped;
      continue;
    }
    CaseRecord record;
    record.index = i;
    record.outcome = check_case(property, *inst, mutation);
    if (!record.outcome.pass) record.instance = serialize_instance(*inst);
    report.cases.push_back(std::move(record));
    ++report.cases_run;
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

nlohmann::json case_to_json(Property property, const CaseRecord& record) {
  nlohmann::json out{{"property", property_name(property)},
                     {"case", record.index},
                     {"pass", record.outcome.pass},
                     {"lhs", record.outcome.lhs},
                     {"rhs", record.outcome.rhs},
                     {"detail", record.outcome.detail}};
  if (record.instance) out["instance"] = *record.instance;
  return out;
}

}  // namespace lefcalc
