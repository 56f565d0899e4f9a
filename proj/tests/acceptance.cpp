// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "softtop/mapping.hpp"
#include "softtop/oracle.hpp"
#include "softtop/problem.hpp"
#include "softtop/report.hpp"
#include "support.hpp"

namespace softtop {
namespace {

constexpr double kGoldenSeconds = 1.0;
constexpr double kSweepSeconds = 300.0;
constexpr std::size_t kPropertyCases = 10'000;
constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string counts(const TheoremSweepReport& r) {
  std::ostringstream s;
  s << r.theorem << " topologies=" << r.topologies << " mappings=" << r.mappings << " soft_sets=" << r.soft_sets
    << " instances=" << r.instances << " violations=" << r.violation_count;
  return s.str();
}

SweepConfig full_config() {
  SweepConfig cfg = SweepConfig::up_to(2, 2, 2);
  cfg.random_samples = 200;
  cfg.violation_limit = 20;
  return cfg;
}

Outcome zero_violations(std::initializer_list<Theorem> theorems, const SweepConfig& cfg) {
  Outcome o;
  const auto start = Clock::now();
  EnumerationBudget budget;
  budget.rng_seed = kSeed;
  for (Theorem t : theorems) {
    const TheoremSweepReport r = sweep_theorem(t, cfg, budget);
    o.pass = o.pass && r.holds() && r.instances > 0;
    o.detail += counts(r) + "; ";
  }
  const double secs = seconds_since(start);
  o.pass = o.pass && secs < kSweepSeconds;
  o.detail += "time=" + std::to_string(secs) + "s";
  return o;
}

Outcome golden_examples() {
  struct Row {
    const char* file;
    bool continuous, open, closed;
  };
  const Row rows[] = {{"example1.soft", true, false, false}, {"example2.soft", false, false, false},
                      {"example3.soft", false, false, false}, {"example4.soft", false, true, true},
                      {"example5.soft", true, false, false},  {"example6.soft", false, true, false},
                      {"example7.soft", false, false, true}};
  Outcome o;
  const auto start = Clock::now();
  int checked = 0;
  for (const Row& row : rows) {
    const std::string f = test::fixture_arg(row.file);
    const ProblemFile p = test::load_fixture(row.file);
    const auto& tau = p.source_topology();
    const auto& sigma = p.target_topology();
    const auto& map = p.mapping();
    const bool lib[] = {is_soft_continuous(map, tau, sigma), is_soft_open_map(map, tau, sigma),
                        is_soft_closed_map(map, tau, sigma)};
    const bool want[] = {row.continuous, row.open, row.closed};
    const char* cmds[] = {"check-continuous ", "check-open ", "check-closed "};
    for (int k = 0; k < 3; ++k) {
      const int exit = test::run_cli(cmds[k] + f).exit_code;
      const bool ok = lib[k] == want[k] && exit == (want[k] ? 0 : 1);
      if (!ok) o.detail += std::string(row.file) + " " + cmds[k] + "mismatch; ";
      o.pass = o.pass && ok;
      ++checked;
    }
  }
  const ProblemFile ex3 = test::load_fixture("example3.soft");
  for (std::size_t alpha = 0; alpha < 2; ++alpha) {
    const bool ok = induced_map_continuous(ex3.mapping(), ex3.source_topology(), ex3.target_topology(), alpha);
    if (!ok) o.detail += "example3 induced map not continuous; ";
    o.pass = o.pass && ok;
  }
  const double secs = seconds_since(start);
  o.pass = o.pass && secs < kGoldenSeconds;
  o.detail += std::to_string(checked) + " verdicts, time=" + std::to_string(secs) + "s";
  return o;
}

Outcome induced_properties() {
  Outcome o = zero_violations({Theorem::kInducedContinuity, Theorem::kInducedOpenClosed}, full_config());
  const ProblemFile ex3 = test::load_fixture("example3.soft");
  const std::vector<SweepInstance> extra{{ex3.source_topology(), ex3.target_topology(), ex3.mapping()}};
  const TheoremSweepReport r = sweep_theorem(Theorem::kInducedContinuityConverse, full_config(), {}, extra);
  bool listed = false;
  for (const auto& v : r.violations) {
    const ProblemFile q = parse_problem(v.instance);
    const auto pm = q.mapping().point_map();
    const auto want = ex3.mapping().point_map();
    listed = listed || (q.source_topology().open_cells() == ex3.source_topology().open_cells() &&
                        q.target_topology().open_cells() == ex3.target_topology().open_cells() &&
                        std::equal(pm.begin(), pm.end(), want.begin(), want.end()));
  }
  o.pass = o.pass && !r.holds() && listed;
  o.detail += "; converse: " + counts(r) + (listed ? ", supplied counterexample listed" : ", counterexample missing");
  return o;
}

Outcome closure_containment() {
  SweepConfig cfg;
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t e = 1; n * e <= 4; ++e) cfg.shapes.push_back({n, n, e});
  cfg.random_samples = 200;
  cfg.violation_limit = 20;
  return zero_violations({Theorem::kClosureContainment, Theorem::kClosureAgreement}, cfg);
}

struct Counter {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first;

  void check(bool ok, const char* law) {
    ++cases;
    if (!ok && failures++ == 0) first = law;
  }
};

Outcome property_suites() {
  std::mt19937_64 rng(kSeed);
  Counter c;
  for (std::size_t i = 0; i < kPropertyCases; ++i) {
    // Every 16th case uses a context wider than one machine word.
    const SoftContext x = (i % 16 == 0) ? test::random_context(rng, 40, 5) : test::random_context(rng, 5, 3);
    const SoftTopology tau = random_soft_topology(x, rng(), rng() % 5);
    const SoftSet a = test::random_soft_set(x, rng);
    const SoftSet b = test::random_soft_set(x, rng);

    c.check(soft_complement(soft_union(a, b)) == soft_intersection(soft_complement(a), soft_complement(b)),
            "de morgan union");
    c.check(soft_complement(soft_intersection(a, b)) == soft_union(soft_complement(a), soft_complement(b)),
            "de morgan intersection");

    const SoftSet cl = soft_closure(tau, a);
    c.check(soft_closure(tau, SoftSet::null(x)).is_null(), "closure of null");
    c.check(soft_subset(a, cl), "closure extensive");
    c.check(soft_closure(tau, cl) == cl, "closure idempotent");
    c.check(soft_closure(tau, soft_union(a, b)) == soft_union(cl, soft_closure(tau, b)), "closure additive");

    const SoftSet in = soft_interior(tau, a);
    c.check(soft_complement(soft_closure(tau, soft_complement(a))) == in, "interior duality");
    c.check(soft_complement(soft_interior(tau, soft_complement(a))) == cl, "closure duality");

    const SoftContext y = synthetic_context('y', 1 + rng() % 5, x.parameter_count());
    std::vector<std::size_t> pm(x.universe_size());
    for (auto& v : pm) v = rng() % y.universe_size();
    const SoftMapping f(x, y, pm);
    const SoftSet g = test::random_soft_set(y, rng);
    const SoftSet h = test::random_soft_set(y, rng);
    c.check(soft_subset(soft_image(f, a), g) == soft_subset(a, soft_preimage(f, g)), "image preimage adjunction");
    c.check(soft_subset(a, soft_preimage(f, soft_image(f, a))), "unit of adjunction");
    c.check(soft_subset(soft_image(f, soft_preimage(f, g)), g), "counit of adjunction");
    c.check(soft_preimage(f, soft_union(g, h)) == soft_union(soft_preimage(f, g), soft_preimage(f, h)),
            "preimage of union");
    c.check(soft_preimage(f, soft_intersection(g, h)) ==
                soft_intersection(soft_preimage(f, g), soft_preimage(f, h)),
            "preimage of intersection");
    c.check(soft_preimage(f, soft_complement(g)) == soft_complement(soft_preimage(f, g)), "preimage of complement");
    c.check(soft_preimage(f, SoftSet::null(y)).is_null() && soft_preimage(f, SoftSet::absolute(y)).is_absolute(),
            "preimage of bounds");
  }
  Outcome o;
  o.pass = c.failures == 0;
  o.detail = std::to_string(kPropertyCases) + " random instances, " + std::to_string(c.cases) + " law checks, " +
             std::to_string(c.failures) + " failures";
  if (!o.pass) o.detail += " (first: " + c.first + ")";
  return o;
}

Outcome determinism() {
  Outcome o;
  EnumerationBudget budget;
  budget.rng_seed = kSeed;
  SweepConfig one = full_config();
  one.threads = 1;
  SweepConfig many = full_config();
  many.threads = 4;
  int compared = 0;
  for (Theorem t : all_theorems()) {
    const std::string a = to_json(sweep_theorem(t, one, budget)).dump();
    const std::string b = to_json(sweep_theorem(t, many, budget)).dump();
    o.pass = o.pass && a == b;
    ++compared;
  }
  const std::string args = "--json --seed 7 sweep THM2_CONVERSE " + test::fixture_arg("example3.soft") +
                           " --max-x 2 --max-y 2 --max-e 1 --samples 50";
  const auto first = test::run_cli(args);
  const auto second = test::run_cli(args);
  o.pass = o.pass && first.out == second.out && first.exit_code == 1 && !first.out.empty();
  o.detail = std::to_string(compared) + " sweeps serial vs parallel byte-identical; CLI report " +
             (first.out == second.out ? "identical" : "differs") + " (" + std::to_string(first.out.size()) +
             " bytes)";
  return o;
}

}  // namespace
}  // namespace softtop

int main() {
  using namespace softtop;
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"golden example verdicts", golden_examples},
      {"continuity equivalences sweep", [] { return zero_violations({Theorem::kContinuityEquivalences}, full_config()); }},
      {"induced parameterwise properties sweep", induced_properties},
      {"closure criterion sweep", [] { return zero_violations({Theorem::kClosureCriterionContinuity}, full_config()); }},
      {"parameterwise closure containment and agreement", closure_containment},
      {"open and closed map characterizations sweep",
       [] { return zero_violations({Theorem::kOpenClosedCharacterizations}, full_config()); }},
      {"homeomorphism equivalences sweep", [] { return zero_violations({Theorem::kHomeomorphismEquivalences}, full_config()); }},
      {"randomized property suites", property_suites},
      {"deterministic reports", determinism},
  };
  int failed = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s criterion %d: %s (%s)\n", o.pass ? "PASS" : "FAIL", index, c.name, o.detail.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
