// Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
// exact integers; the only tolerances are the wall-clock limits below.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "lefcalc/document.hpp"
#include "lefcalc/verify.hpp"

namespace {

using namespace lefcalc;
using Clock = std::chrono::steady_clock;

constexpr double kBundledExampleSeconds = 1.0;
constexpr double kHopfSeconds = 60.0;

struct Result {
  bool pass;
  std::string detail;
};

struct Run {
  int status = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string command = std::string(LEFCALC_CLI) + " " + args + " 2>&1";
  Run result;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buffer{};
  while (std::fgets(buffer.data(), buffer.size(), pipe)) result.out += buffer.data();
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

PropertyReport suite(Property property, std::size_t cases, std::uint64_t seed = 0,
                     Mutation mutation = Mutation::none) {
  InstanceBudget budget;
  budget.case_count = cases;
  budget.seed = seed;
  return run_property_suite(property, budget, mutation);
}

std::string summary(const PropertyReport& r) {
  std::string s = std::string(property_name(r.property)) + ": " + std::to_string(r.cases_run) + " cases, " +
                  std::to_string(r.failures().size()) + " failures, " + std::to_string(r.skipped) + " skipped";
  if (!r.failures().empty()) s += " (first: case " + std::to_string(r.failures()[0].index) + " " + r.failures()[0].outcome.detail + ")";
  return s;
}

bool complete(const PropertyReport& r, std::size_t cases) { return r.passed() && r.cases_run == cases; }

Result bundled_example() {
  const std::string example = std::string(LEFCALC_SOURCE_DIR) + "/data/paper_example.json";
  const auto start = Clock::now();
  const Run integral = run_cli("integrate --instance " + example);
  const Run sheaf = run_cli("sheaf-lefschetz --instance " + example);
  bool ok = integral.status == 0 && integral.out == "3\n" && sheaf.status == 0 && sheaf.out == "3\n";
  std::string detail = "integrate=" + integral.out.substr(0, integral.out.find('\n')) +
                       " sheaf-lefschetz=" + sheaf.out.substr(0, sheaf.out.find('\n')) + " pieces";
  const std::vector<std::pair<std::string, std::string>> pieces{
      {"X1", "1\n"}, {"X2", "1\n"}, {"X3", "-1\n"}, {"X4", "0\n"}, {"X5", "0\n"}};
  for (const auto& [name, expected] : pieces) {
    const Run lambda = run_cli("lambda --instance " + example + " --set " + name);
    const Run lhom = run_cli("lhom --instance " + example + " --set " + name);
    ok = ok && lambda.out == expected && lhom.out == expected;
    detail += " " + lambda.out.substr(0, lambda.out.find('\n')) + "/" + lhom.out.substr(0, lhom.out.find('\n'));
  }
  const double elapsed = seconds_since(start);
  ok = ok && elapsed < kBundledExampleSeconds;
  return {ok, detail + ", " + std::to_string(elapsed) + " s"};
}

Result hopf() {
  const auto start = Clock::now();
  const PropertyReport r = suite(Property::hopf, 500);
  const double elapsed = seconds_since(start);
  return {complete(r, 500) && elapsed < kHopfSeconds, summary(r) + ", " + std::to_string(elapsed) + " s"};
}

Result representation() {
  const PropertyReport r = suite(Property::representation, 200);
  return {complete(r, 200), summary(r)};
}

Result barrow_rule() {
  const PropertyReport r = suite(Property::barrow, 200);
  // Rebuild the same cases to count functions taking both signs.
  std::size_t mixed = 0;
  InstanceBudget budget;
  for (std::size_t i = 0; i < 200; ++i) {
    Rng rng(case_seed(budget.seed, i));
    const auto inst = build_case(Property::barrow, budget, rng, i);
    if (!inst || !inst->function || inst->function->levels().empty()) continue;
    const auto& levels = inst->function->levels();
    if (levels.begin()->first < 0 && levels.rbegin()->first > 0) ++mixed;
  }
  return {complete(r, 200) && mixed > 0, summary(r) + ", " + std::to_string(mixed) + " mixed-sign functions"};
}

Result additivity() {
  const PropertyReport a = suite(Property::additivity, 200);
  const PropertyReport d = suite(Property::dim_additivity, 200);
  return {complete(a, 200) && complete(d, 200), summary(a) + "; " + summary(d)};
}

Result identity() {
  const PropertyReport r = suite(Property::identity, 1000);
  return {complete(r, 1000), summary(r)};
}

Result well_defined() {
  const PropertyReport r = suite(Property::well_defined, 100);
  return {complete(r, 100), summary(r)};
}

Result vanishing_and_scaling() {
  const PropertyReport v = suite(Property::vanishing, 200);
  const PropertyReport s = suite(Property::scaling, 200);
  return {complete(v, 200) && complete(s, 200), summary(v) + "; " + summary(s)};
}

Result cofibration_and_wedge() {
  const PropertyReport c = suite(Property::cofibration, 100);
  const PropertyReport w = suite(Property::wedge, 100);
  const bool figure_eight = !w.cases.empty() && w.cases[0].index == 0 && w.cases[0].outcome.pass &&
                            w.cases[0].outcome.lhs == 1;
  return {complete(c, 100) && complete(w, 100) && figure_eight,
          summary(c) + "; " + summary(w) + "; figure-eight L_c=" +
              (w.cases.empty() ? std::string("?") : std::to_string(w.cases[0].outcome.lhs))};
}

Result mutation_sentinel() {
  const PropertyReport r = suite(Property::hopf, 500, 0, Mutation::flip_chain_sign);
  const auto failures = r.failures();
  if (failures.empty()) return {false, "mutated hopf suite passed: " + summary(r)};
  const CaseRecord& f = failures.front();
  if (!f.instance) return {false, "failure without a serialized instance"};
  const Instance replay = parse_instance(*f.instance);
  const bool reproduced = !check_case(Property::hopf, replay, Mutation::flip_chain_sign).pass &&
                          check_case(Property::hopf, replay, Mutation::none).pass;
  return {reproduced, std::to_string(failures.size()) + " of " + std::to_string(r.cases_run) +
                          " cases fail; counterexample case " + std::to_string(f.index) +
                          (reproduced ? " replays" : " does not replay")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"bundled example", bundled_example},
      {"hopf equivalence", hopf},
      {"representation", representation},
      {"barrow rule", barrow_rule},
      {"additivity", additivity},
      {"identity oracle", identity},
      {"well-definedness", well_defined},
      {"vanishing and scaling", vanishing_and_scaling},
      {"cofibration and wedge", cofibration_and_wedge},
      {"mutation sentinel", mutation_sentinel},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result r{false, {}};
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    if (!r.pass) ++failed;
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << ": " << r.detail
              << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
