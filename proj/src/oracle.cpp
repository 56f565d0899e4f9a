#include "softtop/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <random>
#include <set>
#include <thread>
#include <tuple>

#include "softtop/error.hpp"
#include "softtop/problem.hpp"

namespace softtop {
namespace {

constexpr std::size_t kMaxEnumerableCells = 4;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

CellSet random_cells(std::mt19937_64& rng, std::size_t cells) {
  CellSet out(cells);
  std::uint64_t bits = 0;
  for (std::size_t c = 0; c < cells; ++c) {
    if (c % 64 == 0) bits = rng();
    if ((bits >> (c % 64)) & 1U) out.set(c);
  }
  return out;
}

struct Tally {
  std::uint64_t topologies = 0;
  std::uint64_t mappings = 0;
  std::uint64_t soft_sets = 0;
  std::uint64_t instances = 0;
  std::uint64_t violation_count = 0;
  std::size_t limit = 0;
  std::vector<Violation> violations;

  explicit Tally(std::size_t violation_limit = 0) : limit(violation_limit) {}

  void record(std::string description, const auto& make_instance_text) {
    ++violation_count;
    if (limit == 0 || violations.size() < limit) violations.push_back({std::move(description), make_instance_text()});
  }

  void merge(Tally&& other) {
    topologies += other.topologies;
    mappings += other.mappings;
    soft_sets += other.soft_sets;
    instances += other.instances;
    violation_count += other.violation_count;
    for (auto& v : other.violations) {
      if (limit != 0 && violations.size() >= limit) break;
      violations.push_back(std::move(v));
    }
  }
};

std::string verdict(bool b) { return b ? "T" : "F"; }

std::string instance_text(const SoftTopology& tau, const SoftTopology& sigma, const SoftMapping& f) {
  return serialize(make_instance(tau, &sigma, &f));
}

bool all_parameters(const SoftMapping& f, const auto& pred) {
  for (std::size_t a = 0; a < f.source().parameter_count(); ++a)
    if (!pred(a)) return false;
  return true;
}

// One (tau, sigma, f) instance of a mapping result. `hypothesis` caches the
// closure criterion for tau across calls.
void evaluate_mapping(Theorem theorem, const SoftTopology& tau, const SoftTopology& sigma, const SoftMapping& f,
                      const EnumerationBudget& budget, std::optional<bool>& hypothesis, Tally& tally) {
  switch (theorem) {
    case Theorem::kContinuityEquivalences: {
      require_enumerable(budget, f.source().cell_count());
      require_enumerable(budget, f.target().cell_count());
      const ContinuityReport r = continuity_report(f, tau, sigma, budget);
      ++tally.mappings;
      ++tally.instances;
      tally.soft_sets += (std::uint64_t{1} << f.source().cell_count()) + (std::uint64_t{1} << f.target().cell_count());
      if (!r.consistent()) {
        std::string d = "conditions (1)..(6) disagree:";
        for (const auto& c : r.conditions) d += " " + verdict(c.value_or(false));
        tally.record(d, [&] { return instance_text(tau, sigma, f); });
      }
      return;
    }
    case Theorem::kInducedContinuity:
    case Theorem::kInducedContinuityConverse: {
      ++tally.mappings;
      ++tally.instances;
      const bool soft = is_soft_continuous(f, tau, sigma);
      const bool induced = all_parameters(f, [&](std::size_t a) { return induced_map_continuous(f, tau, sigma, a); });
      if (theorem == Theorem::kInducedContinuity && soft && !induced)
        tally.record("soft continuous but some induced map is not continuous", [&] { return instance_text(tau, sigma, f); });
      if (theorem == Theorem::kInducedContinuityConverse && induced && !soft)
        tally.record("every induced map continuous but not soft continuous", [&] { return instance_text(tau, sigma, f); });
      return;
    }
    case Theorem::kClosureCriterionContinuity: {
      if (!hypothesis) {
        hypothesis = closures_always_soft_closed(tau, budget);
        tally.soft_sets += std::uint64_t{1} << tau.context().cell_count();
      }
      ++tally.mappings;
      if (!*hypothesis) return;
      ++tally.instances;
      const bool soft = is_soft_continuous(f, tau, sigma);
      const bool induced = all_parameters(f, [&](std::size_t a) { return induced_map_continuous(f, tau, sigma, a); });
      if (soft != induced)
        tally.record("hypothesis holds but soft continuity " + verdict(soft) + " != induced continuity " +
                                        verdict(induced), [&] { return instance_text(tau, sigma, f); });
      return;
    }
    case Theorem::kOpenClosedCharacterizations: {
      require_enumerable(budget, f.source().cell_count());
      ++tally.mappings;
      ++tally.instances;
      tally.soft_sets += std::uint64_t{2} << f.source().cell_count();
      const bool open = is_soft_open_map(f, tau, sigma);
      const bool open_chr = open_map_via_interior(f, tau, sigma, budget);
      const bool closed = is_soft_closed_map(f, tau, sigma);
      const bool closed_chr = closed_map_via_closure(f, tau, sigma, budget);
      if (open != open_chr)
        tally.record("open map " + verdict(open) + " != interior characterization " + verdict(open_chr), [&] { return instance_text(tau, sigma, f); });
      if (closed != closed_chr)
        tally.record("closed map " + verdict(closed) + " != closure characterization " + verdict(closed_chr), [&] { return instance_text(tau, sigma, f); });
      return;
    }
    case Theorem::kHomeomorphismEquivalences: {
      if (!f.is_bijective()) return;
      ++tally.mappings;
      ++tally.instances;
      const HomeomorphismReport r = homeomorphism_equivalences(f, tau, sigma);
      if (!r.agreement.verdict)
        tally.record("homeomorphism " + verdict(r.homeomorphism) + ", continuous+closed " +
                                        verdict(r.continuous_and_closed) + ", continuous+open " +
                                        verdict(r.continuous_and_open), [&] { return instance_text(tau, sigma, f); });
      return;
    }
    case Theorem::kInducedOpenClosed: {
      ++tally.mappings;
      ++tally.instances;
      if (is_soft_open_map(f, tau, sigma) &&
          !all_parameters(f, [&](std::size_t a) { return induced_map_open(f, tau, sigma, a); }))
        tally.record("soft open but some induced map is not open", [&] { return instance_text(tau, sigma, f); });
      if (is_soft_closed_map(f, tau, sigma) &&
          !all_parameters(f, [&](std::size_t a) { return induced_map_closed(f, tau, sigma, a); }))
        tally.record("soft closed but some induced map is not closed", [&] { return instance_text(tau, sigma, f); });
      return;
    }
    default:
      return;
  }
}

void evaluate_space(Theorem theorem, const SoftTopology& tau, const EnumerationBudget& budget, Tally& tally) {
  const SoftContext& ctx = tau.context();
  if (theorem == Theorem::kInducedTopologies) {
    for (std::size_t a = 0; a < ctx.parameter_count(); ++a) {
      ++tally.instances;
      if (!induced_topology(tau, a).is_valid())
        tally.record("induced topology at " + ctx.parameters()[a] + " is not a topology", [&] { return serialize(make_instance(tau, nullptr, nullptr)); });
    }
    return;
  }
  for (const SoftSet& a : enumerate_soft_sets(ctx, budget)) {
    ++tally.soft_sets;
    ++tally.instances;
    const SoftSet pw = parameterwise_closure(tau, a);
    const SoftSet cl = soft_closure(tau, a);
    if (theorem == Theorem::kClosureContainment) {
      if (!soft_subset(pw, cl))
        tally.record("parameterwise closure not inside soft closure", [&] { return serialize(make_instance(tau, nullptr, nullptr, {{"A", a}})); });
    } else {
      const bool equal = pw == cl;
      const bool complement_open = is_soft_open(tau, soft_complement(pw));
      if (equal != complement_open)
        tally.record("closures equal " + verdict(equal) + " but complement open " + verdict(complement_open), [&] { return serialize(make_instance(tau, nullptr, nullptr, {{"A", a}})); });
    }
  }
}

unsigned thread_count(const SweepConfig& config, std::size_t work) {
  unsigned n = config.threads != 0 ? config.threads : std::max(1U, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(work, 1)));
}

// Runs body(i, tally_i) for i in [0, count) across threads; tallies merge in
// index order so the result does not depend on scheduling.
template <typename Body>
Tally parallel_tally(std::size_t count, unsigned threads, std::size_t limit, Body&& body) {
  std::vector<Tally> parts(count, Tally(limit));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  auto worker = [&](unsigned w) {
    try {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) body(i, parts[i]);
    } catch (...) {
      errors[w] = std::current_exception();
      next.store(count);
    }
  };
  if (threads <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  Tally total(limit);
  for (auto& p : parts) total.merge(std::move(p));
  return total;
}

struct RandomInstance {
  SoftTopology tau;
  SoftTopology sigma;
  SoftMapping f;
};

RandomInstance random_instance(const SweepConfig& config, std::uint64_t seed) {
  const SoftContext x = synthetic_context('x', config.sample_universe, config.sample_parameters);
  const SoftContext y = synthetic_context('y', config.sample_universe, config.sample_parameters);
  std::mt19937_64 rng(seed);
  const std::uint64_t tau_seed = rng();
  const std::uint64_t sigma_seed = rng();
  SoftTopology tau = random_soft_topology(x, tau_seed, rng() % 5);
  SoftTopology sigma = random_soft_topology(y, sigma_seed, rng() % 5);
  std::vector<std::size_t> images(x.universe_size());
  for (auto& i : images) i = rng() % y.universe_size();
  return {std::move(tau), std::move(sigma), SoftMapping(x, y, std::move(images))};
}

}  // namespace

std::vector<SoftSet> enumerate_soft_sets(const SoftContext& ctx, const EnumerationBudget& budget) {
  const std::size_t cells = ctx.cell_count();
  require_enumerable(budget, cells);
  std::vector<SoftSet> out;
  out.reserve(std::size_t{1} << cells);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << cells); ++v) out.emplace_back(ctx, CellSet::from_word(cells, v));
  return out;
}

std::vector<SoftTopology> enumerate_soft_topologies(const SoftContext& ctx, const EnumerationBudget& budget) {
  const std::size_t cells = ctx.cell_count();
  if (cells > kMaxEnumerableCells)
    throw SoftError(Errc::kInstanceTooLarge, "topology enumeration needs |X|·|E| <= 4, got " + std::to_string(cells));
  const std::vector<SoftSet> all = enumerate_soft_sets(ctx, budget);
  // Candidates: null and absolute plus any subset of the middle sets.
  const std::size_t middle = all.size() - 2;
  std::vector<SoftTopology> out;
  std::vector<SoftSet> candidate;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << middle); ++mask) {
    candidate.clear();
    candidate.push_back(all.front());
    for (std::size_t i = 0; i < middle; ++i)
      if ((mask >> i) & 1U) candidate.push_back(all[i + 1]);
    candidate.push_back(all.back());
    if (!validate_topology(ctx, candidate).verdict) continue;
    if (out.size() >= budget.max_topologies)
      throw SoftError(Errc::kInstanceTooLarge, "topology count exceeds the enumeration budget");
    out.emplace_back(ctx, candidate);
  }
  return out;
}

SoftTopology closure_under_ops(const SoftContext& ctx, std::span<const SoftSet> collection) {
  std::set<CellSet> members{CellSet(ctx.cell_count()), CellSet::full(ctx.cell_count())};
  for (const auto& s : collection) {
    require_same_context(ctx, s.context());
    members.insert(s.cells());
  }
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<CellSet> snapshot(members.begin(), members.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        grew |= members.insert(snapshot[i] | snapshot[j]).second;
        grew |= members.insert(snapshot[i] & snapshot[j]).second;
      }
    }
  }
  std::vector<SoftSet> sets;
  sets.reserve(members.size());
  for (const auto& c : members) sets.emplace_back(ctx, c);
  return SoftTopology(ctx, sets);
}

SoftTopology random_soft_topology(const SoftContext& ctx, std::uint64_t seed, std::size_t generator_count) {
  std::mt19937_64 rng(seed);
  std::vector<SoftSet> generators;
  generators.reserve(generator_count);
  for (std::size_t i = 0; i < generator_count; ++i) generators.emplace_back(ctx, random_cells(rng, ctx.cell_count()));
  return closure_under_ops(ctx, generators);
}

SoftContext synthetic_context(char element_prefix, std::size_t universe_size, std::size_t parameter_count) {
  std::vector<std::string> universe;
  std::vector<std::string> parameters;
  for (std::size_t i = 1; i <= universe_size; ++i) universe.push_back(element_prefix + std::to_string(i));
  for (std::size_t i = 1; i <= parameter_count; ++i) parameters.push_back("e" + std::to_string(i));
  return {std::move(universe), std::move(parameters)};
}

std::vector<SoftMapping> enumerate_point_maps(const SoftContext& source, const SoftContext& target) {
  const std::size_t nx = source.universe_size();
  const std::size_t ny = target.universe_size();
  std::vector<SoftMapping> out;
  std::vector<std::size_t> images(nx, 0);
  while (true) {
    out.emplace_back(source, target, images);
    std::size_t i = nx;
    while (i > 0 && images[i - 1] + 1 == ny) images[--i] = 0;
    if (i == 0) break;
    ++images[i - 1];
  }
  return out;
}

namespace {

constexpr std::pair<Theorem, std::string_view> kTheoremIds[] = {
    {Theorem::kContinuityEquivalences, "THM1"},
    {Theorem::kInducedContinuity, "THM2"},
    {Theorem::kInducedContinuityConverse, "THM2_CONVERSE"},
    {Theorem::kClosureCriterionContinuity, "THM3"},
    {Theorem::kOpenClosedCharacterizations, "THM4"},
    {Theorem::kHomeomorphismEquivalences, "THM5"},
    {Theorem::kInducedTopologies, "PROP1"},
    {Theorem::kClosureContainment, "PROP2"},
    {Theorem::kInducedOpenClosed, "PROP3"},
    {Theorem::kClosureAgreement, "COR1"},
};

}  // namespace

std::string_view theorem_id(Theorem t) {
  for (const auto& [theorem, id] : kTheoremIds)
    if (theorem == t) return id;
  return "UNKNOWN";
}

Theorem parse_theorem_id(std::string_view id) {
  for (const auto& [theorem, name] : kTheoremIds)
    if (name == id) return theorem;
  throw SoftError(Errc::kUnknownTheorem, "unknown theorem id '" + std::string(id) + "'");
}

std::vector<Theorem> all_theorems() {
  std::vector<Theorem> out;
  for (const auto& [theorem, id] : kTheoremIds) out.push_back(theorem);
  return out;
}

bool is_mapping_theorem(Theorem t) {
  return t != Theorem::kInducedTopologies && t != Theorem::kClosureContainment && t != Theorem::kClosureAgreement;
}

SweepConfig SweepConfig::up_to(std::size_t max_x, std::size_t max_y, std::size_t max_e) {
  SweepConfig config;
  for (std::size_t e = 1; e <= max_e; ++e)
    for (std::size_t x = 1; x <= max_x; ++x)
      for (std::size_t y = 1; y <= max_y; ++y) config.shapes.push_back({x, y, e});
  return config;
}

TheoremSweepReport sweep_theorem(Theorem theorem, const SweepConfig& config, const EnumerationBudget& budget,
                                 std::span<const SweepInstance> extra) {
  TheoremSweepReport report;
  report.theorem = std::string(theorem_id(theorem));
  Tally total(config.violation_limit);
  std::map<std::tuple<char, std::size_t, std::size_t>, std::vector<SoftTopology>> cache;
  auto topologies_for = [&](char prefix, std::size_t n, std::size_t e) -> const std::vector<SoftTopology>& {
    const auto key = std::make_tuple(prefix, n, e);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, enumerate_soft_topologies(synthetic_context(prefix, n, e), budget)).first;
    return it->second;
  };

  if (is_mapping_theorem(theorem)) {
    for (const auto& inst : extra) {
      if (!inst.f || !inst.sigma) continue;
      ++report.contexts;
      ++total.topologies;
      std::optional<bool> hypothesis;
      evaluate_mapping(theorem, inst.tau, *inst.sigma, *inst.f, budget, hypothesis, total);
    }
    for (const ContextShape& shape : config.shapes) {
      const auto& sources = topologies_for('x', shape.source_universe, shape.parameters);
      const auto& targets = topologies_for('y', shape.target_universe, shape.parameters);
      const auto maps = enumerate_point_maps(sources.front().context(), targets.front().context());
      ++report.contexts;
      total.merge(parallel_tally(sources.size(), thread_count(config, sources.size()), config.violation_limit, [&](std::size_t i, Tally& t) {
        std::optional<bool> hypothesis;
        for (const auto& sigma : targets) {
          ++t.topologies;
          for (const auto& f : maps) evaluate_mapping(theorem, sources[i], sigma, f, budget, hypothesis, t);
        }
      }));
    }
    for (std::size_t s = 0; s < config.random_samples; ++s) {
      const RandomInstance r = random_instance(config, splitmix64(budget.rng_seed + s));
      ++report.contexts;
      ++total.topologies;
      std::optional<bool> hypothesis;
      evaluate_mapping(theorem, r.tau, r.sigma, r.f, budget, hypothesis, total);
    }
  } else {
    std::set<std::pair<std::size_t, std::size_t>> spaces;
    for (const ContextShape& shape : config.shapes) {
      spaces.insert({shape.source_universe, shape.parameters});
      spaces.insert({shape.target_universe, shape.parameters});
    }
    auto single = [&](const SoftTopology& tau) {
      ++report.contexts;
      ++total.topologies;
      evaluate_space(theorem, tau, budget, total);
    };
    for (const auto& inst : extra) {
      single(inst.tau);
      if (inst.sigma) single(*inst.sigma);
    }
    for (const auto& [n, e] : spaces) {
      const auto& tops = topologies_for('x', n, e);
      ++report.contexts;
      total.merge(parallel_tally(tops.size(), thread_count(config, tops.size()), config.violation_limit, [&](std::size_t i, Tally& t) {
        ++t.topologies;
        evaluate_space(theorem, tops[i], budget, t);
      }));
    }
    for (std::size_t s = 0; s < config.random_samples; ++s) {
      const RandomInstance r = random_instance(config, splitmix64(budget.rng_seed + s));
      single(r.tau);
    }
  }

  report.topologies = total.topologies;
  report.mappings = total.mappings;
  report.soft_sets = total.soft_sets;
  report.instances = total.instances;
  report.violation_count = total.violation_count;
  report.violations = std::move(total.violations);
  return report;
}

}  // namespace softtop
