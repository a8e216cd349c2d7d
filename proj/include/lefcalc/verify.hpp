#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lefcalc/document.hpp"
#include "lefcalc/generator.hpp"

namespace lefcalc {

enum class Property {
  hopf,            // lambda_c = l_hom
  additivity,      // lambda_c over disjoint unions
  dim_additivity,  // l_hom over skeleton layers
  representation,  // sheaf Lefschetz number = integral of the fiber-dimension function
  barrow,          // barrow = integrate, mixed signs
  well_defined,    // integral independent of the representation
  cofibration,     // L_c(X) = L_c(X - A) + L_c(A) for an invariant subcomplex A
  vanishing,       // no homology above the ambient dimension
  scaling,         // rank-n constant sheaf gives n * lambda_c
  wedge,           // representation identity on wedges of spheres and graphs
  identity,        // lambda_c(id, U) = euler_cc(U)
};

std::string_view property_name(Property property);
/// Throws Error for an unknown name.
Property parse_property(std::string_view name);
const std::vector<Property>& all_properties();

/// Test-only fault injection.
enum class Mutation {
  none,
  /// lambda_c is evaluated with the chain coefficient signs negated.
  flip_chain_sign,
};

struct CaseOutcome {
  bool pass = false;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  std::string detail;
};

struct CaseRecord {
  std::size_t index = 0;
  CaseOutcome outcome;
  /// Serialized instance, kept for failures.
  std::optional<nlohmann::json> instance;
};

struct PropertyReport {
  Property property{};
  std::size_t cases_run = 0;
  /// Cases for which no instance could be generated.
  std::size_t skipped = 0;
  std::vector<CaseRecord> cases;
  std::chrono::milliseconds elapsed{0};

  std::vector<CaseRecord> failures() const;
  bool passed() const;
};

/// Builds the instance for one case: deterministic in (property, budget, rng state).
std::optional<Instance> build_case(Property property, const InstanceBudget& budget, Rng& rng, std::size_t index);

/// Evaluates the identity on one instance. Errors raised while evaluating are
/// reported as failures with the message in `detail`.
CaseOutcome check_case(Property property, const Instance& instance, Mutation mutation = Mutation::none);

PropertyReport run_property_suite(Property property, const InstanceBudget& budget,
                                  Mutation mutation = Mutation::none);

/// {"property", "case", "pass", "lhs", "rhs", "detail", and "instance" on failure}.
nlohmann::json case_to_json(Property property, const CaseRecord& record);

}  // namespace lefcalc
