// lefcalc: Lefschetz numbers, Lefschetz integrals and identity checks for
// simplicial self-maps.
//
// Exit codes: 0 success, 1 property failures, 2 usage or input errors.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>

#include "lefcalc/calculus.hpp"
#include "lefcalc/document.hpp"
#include "lefcalc/homology.hpp"
#include "lefcalc/lefschetz.hpp"
#include "lefcalc/paper_example.hpp"
#include "lefcalc/sheaf.hpp"
#include "lefcalc/verify.hpp"

namespace {

using namespace lefcalc;

constexpr int kUsageError = 2;
constexpr int kPropertyFailure = 1;

struct Options {
  std::string instance;
  std::string set;
  std::string method = "direct";
  std::string property = "all";
  std::string mutate = "none";
  std::size_t cases = 100;
  std::uint64_t seed = 0;
  int max_vertices = 8;
  int max_dim = 3;
  bool json = false;
  std::string example;
  std::string out;
};

OpenSimplexSet selected_set(const Instance& inst, const std::string& name) {
  if (name.empty()) return OpenSimplexSet::all(inst.complex);
  return inst.set(name);
}

ConstructibleFunction instance_function(const Instance& inst) {
  if (inst.function) return *inst.function;
  if (inst.sheaf) return associated_function(*inst.sheaf);
  throw Error("instance has neither a function nor a sheaf");
}

int run_verify(const Options& opt) {
  const Mutation mutation = [&] {
    if (opt.mutate == "none") return Mutation::none;
    if (opt.mutate == "flip-chain-sign") return Mutation::flip_chain_sign;
    throw Error("unknown mutation '" + opt.mutate + "'");
  }();
  std::vector<Property> properties;
  if (opt.property == "all")
    properties = all_properties();
  else
    properties.push_back(parse_property(opt.property));

  if (!opt.instance.empty()) {
    const Instance inst = load_instance(opt.instance);
    bool ok = true;
    for (Property p : properties) {
      CaseRecord record{0, check_case(p, inst, mutation), std::nullopt};
      ok = ok && record.outcome.pass;
      if (opt.json)
        std::cout << case_to_json(p, record).dump() << "\n";
      else
        std::cout << property_name(p) << ": " << (record.outcome.pass ? "PASS" : "FAIL") << " lhs=" << record.outcome.lhs
                  << " rhs=" << record.outcome.rhs << (record.outcome.detail.empty() ? "" : " (" + record.outcome.detail + ")")
                  << "\n";
    }
    return ok ? 0 : kPropertyFailure;
  }

  InstanceBudget budget;
  budget.case_count = opt.cases;
  budget.seed = opt.seed;
  budget.max_vertices = opt.max_vertices;
  budget.max_dimension = opt.max_dim;
  validate_budget(budget);

  bool ok = true;
  if (!opt.json)
    std::cout << std::left << std::setw(16) << "property" << std::setw(8) << "cases" << std::setw(10) << "failures"
              << std::setw(9) << "skipped" << std::setw(8) << "result" << "time_ms\n";
  for (Property p : properties) {
    const PropertyReport report = run_property_suite(p, budget, mutation);
    ok = ok && report.passed();
    if (opt.json) {
      for (const CaseRecord& record : report.cases) std::cout << case_to_json(p, record).dump() << "\n";
    } else {
      std::cout << std::left << std::setw(16) << property_name(p) << std::setw(8) << report.cases_run << std::setw(10)
                << report.failures().size() << std::setw(9) << report.skipped << std::setw(8)
                << (report.passed() ? "PASS" : "FAIL") << report.elapsed.count() << "\n";
      for (const CaseRecord& f : report.failures())
        std::cerr << property_name(p) << " case " << f.index << ": lhs=" << f.outcome.lhs << " rhs=" << f.outcome.rhs
                  << " " << f.outcome.detail << "\n"
                  << f.instance->dump() << "\n";
    }
  }
  return ok ? 0 : kPropertyFailure;
}

int run_example(const Options& opt) {
  if (opt.example != "paper") throw Error("unknown example '" + opt.example + "' (available: paper)");
  if (opt.out.empty()) {
    std::cout << paper_example_document();
    return 0;
  }
  std::filesystem::create_directories(opt.out);
  const std::filesystem::path path = std::filesystem::path(opt.out) / "paper_example.json";
  std::ofstream file(path);
  file << paper_example_document();
  if (!file) throw Error("cannot write " + path.string());
  std::cout << path.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lefschetz numbers and Lefschetz calculus on simplicial complexes"};
  app.require_subcommand(1);
  Options opt;

  auto* lambda = app.add_subcommand("lambda", "Combinatorial Lefschetz number of the map on a set");
  auto* lhom = app.add_subcommand("lhom", "Lefschetz number on compactly supported homology of a set");
  auto* sheaf = app.add_subcommand("sheaf-lefschetz", "Sheaf-theoretic Lefschetz number of the instance sheaf");
  auto* integrate_cmd = app.add_subcommand("integrate", "Integral of the instance function against the Lefschetz number");
  auto* verify = app.add_subcommand("verify", "Run property suites on generated instances");
  auto* example = app.add_subcommand("example", "Write a bundled instance document");

  for (auto* cmd : {lambda, lhom}) {
    cmd->add_option("--instance", opt.instance, "Instance document (JSON)")->required();
    cmd->add_option("--set", opt.set, "Named set; the whole complex when omitted");
  }
  sheaf->add_option("--instance", opt.instance, "Instance document (JSON)")->required();
  integrate_cmd->add_option("--instance", opt.instance, "Instance document (JSON)")->required();
  integrate_cmd->add_option("--method", opt.method, "direct or barrow")->check(CLI::IsMember({"direct", "barrow"}));

  verify->add_option("--property", opt.property, "Property name or 'all'");
  verify->add_option("--cases", opt.cases, "Cases per property")->check(CLI::PositiveNumber);
  verify->add_option("--seed", opt.seed, "64-bit seed");
  verify->add_option("--max-vertices", opt.max_vertices, "Vertex bound")->check(CLI::PositiveNumber);
  verify->add_option("--max-dim", opt.max_dim, "Dimension bound")->check(CLI::NonNegativeNumber);
  verify->add_option("--instance", opt.instance, "Check a single instance document instead of generating");
  verify->add_option("--mutate", opt.mutate, "Fault injection: none or flip-chain-sign");
  verify->add_flag("--json", opt.json, "One JSON object per case");

  example->add_option("name", opt.example, "Example name (paper)")->required();
  example->add_option("--out", opt.out, "Directory to write into; stdout when omitted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*lambda || *lhom) {
      const Instance inst = load_instance(opt.instance);
      const OpenSimplexSet set = selected_set(inst, opt.set);
      std::cout << (*lambda ? lambda_c(inst.map, set) : l_hom(inst.map, set)) << "\n";
      return 0;
    }
    if (*sheaf) {
      const Instance inst = load_instance(opt.instance);
      if (!inst.sheaf) throw Error("instance has no sheaf");
      std::cout << sheaf_lefschetz(inst.map, *inst.sheaf) << "\n";
      return 0;
    }
    if (*integrate_cmd) {
      const Instance inst = load_instance(opt.instance);
      const ConstructibleFunction h = instance_function(inst);
      const std::int64_t value =
          opt.method == "barrow" ? barrow(inst.map, h) : integrate(inst.map, canonical_representation(h));
      std::cout << value << "\n";
      return 0;
    }
    if (*verify) return run_verify(opt);
    if (*example) return run_example(opt);
  } catch (const lefcalc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
