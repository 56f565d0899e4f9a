// softtop: command-line front end for soft topology checks and theorem sweeps.
//
// Exit codes: 0 verdict true / computation done, 1 verdict false (witness
// printed), 2 input error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "softtop/error.hpp"
#include "softtop/mapping.hpp"
#include "softtop/oracle.hpp"
#include "softtop/problem.hpp"
#include "softtop/report.hpp"
#include "softtop/topology.hpp"

namespace {

using namespace softtop;

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kInputError = 2;

struct Options {
  bool json = false;
  std::uint64_t budget = std::uint64_t{1} << 16;
  std::uint64_t seed = 0;
  std::string file;
  std::vector<std::string> files;
  std::string set;
  std::string point;
  std::string param;
  std::string topology;
  std::string theorem;
  std::size_t max_x = 2;
  std::size_t max_y = 2;
  std::size_t max_e = 2;
  std::size_t samples = 0;
  std::size_t max_violations = 10;
  std::size_t universe_size = 0;
  std::size_t parameter_count = 0;
  bool list = false;
};

EnumerationBudget budget_of(const Options& o) {
  EnumerationBudget b;
  b.max_soft_sets = o.budget;
  b.rng_seed = o.seed;
  return b;
}

const char* tf(bool b) { return b ? "true" : "false"; }

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

void print_witnesses(const std::vector<Witness>& witnesses, const std::string& indent = "  ") {
  for (const auto& w : witnesses) {
    std::cout << indent << w.name << ":";
    if (w.set) std::cout << " " << to_string(*w.set);
    if (!w.detail.empty()) std::cout << " (" << w.detail << ")";
    std::cout << "\n";
  }
}

std::string subset_text(const CellSet& subset, const SoftContext& ctx) {
  std::string out = "{";
  bool first = true;
  for (std::size_t x : subset.cells()) {
    out += (first ? "" : ",") + ctx.universe()[x];
    first = false;
  }
  return out + "}";
}

const NamedTopology& chosen_topology(const ProblemFile& p, const Options& o) {
  return o.topology.empty() ? p.default_topology() : p.find_topology(o.topology);
}

const SoftTopology& validated(const NamedTopology& t) {
  if (!t.topology) throw SoftError(Errc::kAxiomViolation, "'" + t.name + "' is not a soft topology");
  return *t.topology;
}

// The operand of closure/interior: a soft point when --point is given (with
// --set as its label), otherwise the named set.
std::pair<std::string, SoftSet> operand(const ProblemFile& p, const NamedTopology& t, const Options& o) {
  const SoftContext& ctx = t.topology->context();
  if (!o.point.empty()) return {o.set.empty() ? o.point : o.set, soft_point_set(ctx, parse_point(ctx, o.point))};
  if (o.set.empty()) throw SoftError(Errc::kUnknownName, "give --set NAME or --point x@e");
  return {o.set, p.resolve_set(o.set, t.target)};
}

int cmd_check_topology(const Options& o) {
  ProblemFile p = load_problem(o.file, ParseOptions{false});
  bool all_valid = true;
  Json out = Json::object();
  out["command"] = "check-topology";
  Json results = Json::array();
  for (const auto& t : p.topologies) {
    if (!o.topology.empty() && t.name != o.topology) continue;
    const CheckReport r = validate_topology(p.side(t.target), t.member_sets);
    all_valid = all_valid && r.verdict;
    if (o.json) {
      Json j = to_json(r);
      j["topology"] = t.name;
      results.push_back(std::move(j));
    } else {
      std::cout << "topology " << t.name << ": " << (r.verdict ? "valid" : "not a soft topology") << "\n";
      print_witnesses(r.witnesses);
    }
  }
  if (!o.topology.empty()) p.find_topology(o.topology);
  if (o.json) {
    out["verdict"] = all_valid;
    out["topologies"] = std::move(results);
    emit(out);
  }
  return all_valid ? kTrue : kFalse;
}

int cmd_closure(const Options& o, bool interior) {
  const ProblemFile p = load_problem(o.file);
  const NamedTopology& named = chosen_topology(p, o);
  const SoftTopology& t = validated(named);
  const auto [label, a] = operand(p, named, o);
  const SoftContext& ctx = t.context();
  if (interior) {
    const SoftSet in = soft_interior(t, a);
    const auto points = interior_points(t, a);
    if (o.json) {
      Json out = Json::object();
      out["command"] = "interior";
      out["topology"] = named.name;
      out["operand"] = label;
      out["set"] = to_json(a);
      out["soft_interior"] = to_json(in);
      Json pts = Json::array();
      for (const auto& pt : points) pts.push_back(to_string(ctx, pt));
      out["interior_points"] = std::move(pts);
      emit(out);
    } else {
      std::cout << "soft interior of " << label << " in " << named.name << ": " << to_string(in) << "\n";
      std::cout << "interior points:";
      for (const auto& pt : points) std::cout << " " << to_string(ctx, pt);
      std::cout << "\n";
    }
    return kTrue;
  }
  const SoftSet cl = soft_closure(t, a);
  const SoftSet pw = parameterwise_closure(t, a);
  const bool agree = closure_operators_agree(t, a);
  if (o.json) {
    Json out = Json::object();
    out["command"] = "closure";
    out["topology"] = named.name;
    out["operand"] = label;
    out["set"] = to_json(a);
    out["soft_closure"] = to_json(cl);
    out["parameterwise_closure"] = to_json(pw);
    out["closures_agree"] = agree;
    emit(out);
  } else {
    std::cout << "soft closure of " << label << " in " << named.name << ": " << to_string(cl) << "\n";
    std::cout << "parameterwise closure: " << to_string(pw) << "\n";
    std::cout << "closures agree: " << tf(agree) << "\n";
  }
  return kTrue;
}

int cmd_param_topology(const Options& o) {
  const ProblemFile p = load_problem(o.file);
  const NamedTopology& named = chosen_topology(p, o);
  const SoftTopology& t = validated(named);
  const SoftContext& ctx = t.context();
  std::vector<std::size_t> alphas;
  if (!o.param.empty()) {
    alphas.push_back(ctx.parameter_index(o.param));
  } else {
    for (std::size_t a = 0; a < ctx.parameter_count(); ++a) alphas.push_back(a);
  }
  Json out = Json::object();
  out["command"] = "param-topology";
  out["topology"] = named.name;
  Json induced = Json::object();
  for (std::size_t a : alphas) {
    const PointTopology pt = induced_topology(t, a);
    if (o.json) {
      induced[ctx.parameters()[a]] = to_json(pt, ctx);
    } else {
      std::cout << named.name << " at " << ctx.parameters()[a] << ":";
      for (const auto& u : pt.opens()) std::cout << " " << subset_text(u, ctx);
      std::cout << "\n";
    }
  }
  if (o.json) {
    out["induced"] = std::move(induced);
    emit(out);
  }
  return kTrue;
}

int cmd_check_continuous(const Options& o) {
  const ProblemFile p = load_problem(o.file);
  const SoftMapping& f = p.mapping();
  const SoftTopology& tau = p.source_topology();
  const SoftTopology& sigma = p.target_topology();
  const ContinuityReport r = continuity_report(f, tau, sigma, budget_of(o));
  std::vector<bool> induced;
  for (std::size_t a = 0; a < f.source().parameter_count(); ++a) induced.push_back(induced_map_continuous(f, tau, sigma, a));
  if (o.json) {
    Json out = to_json(r);
    Json ind = Json::object();
    for (std::size_t a = 0; a < induced.size(); ++a) ind[f.source().parameters()[a]] = static_cast<bool>(induced[a]);
    out["induced_continuous"] = std::move(ind);
    Json wrapped = Json::object();
    wrapped["command"] = "check-continuous";
    wrapped["map"] = p.map->name;
    wrapped.update(out);
    emit(wrapped);
  } else {
    std::cout << "soft continuous: " << tf(r.continuous()) << "; ";
    if (r.consistent() && r.exhaustive()) {
      std::cout << "conditions (1)..(6): " << tf(r.continuous()) << "\n";
    } else {
      std::cout << "conditions:";
      for (std::size_t i = 0; i < r.conditions.size(); ++i)
        std::cout << " (" << i + 1 << ")=" << (r.conditions[i] ? tf(*r.conditions[i]) : "skipped");
      std::cout << "\n";
    }
    for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
      if (r.witnesses[i].empty()) continue;
      std::cout << "condition (" << i + 1 << ") witness:\n";
      print_witnesses(r.witnesses[i]);
    }
    for (std::size_t a = 0; a < induced.size(); ++a)
      std::cout << "induced map at " << f.source().parameters()[a] << " continuous: " << tf(induced[a]) << "\n";
  }
  return r.continuous() ? kTrue : kFalse;
}

int cmd_check_open_closed(const Options& o, bool open) {
  const ProblemFile p = load_problem(o.file);
  const SoftMapping& f = p.mapping();
  const SoftTopology& tau = p.source_topology();
  const SoftTopology& sigma = p.target_topology();
  const CheckReport r = open ? check_soft_open_map(f, tau, sigma) : check_soft_closed_map(f, tau, sigma);
  std::optional<CheckReport> characterization;
  if (budget_of(o).admits_cells(f.source().cell_count()))
    characterization = open ? check_open_map_via_interior(f, tau, sigma, budget_of(o))
                            : check_closed_map_via_closure(f, tau, sigma, budget_of(o));
  const char* what = open ? "soft open" : "soft closed";
  if (o.json) {
    Json out = Json::object();
    out["command"] = open ? "check-open" : "check-closed";
    out["map"] = p.map->name;
    out["verdict"] = r.verdict;
    out["witnesses"] = to_json(r)["witnesses"];
    if (characterization) out["characterization"] = to_json(*characterization);
    emit(out);
  } else {
    std::cout << what << ": " << tf(r.verdict) << "\n";
    print_witnesses(r.witnesses);
    if (characterization) {
      std::cout << (open ? "interior characterization: " : "closure characterization: ") << tf(characterization->verdict) << "\n";
      print_witnesses(characterization->witnesses);
    }
  }
  return r.verdict ? kTrue : kFalse;
}

int cmd_check_homeo(const Options& o) {
  const ProblemFile p = load_problem(o.file);
  const SoftMapping& f = p.mapping();
  const SoftTopology& tau = p.source_topology();
  const SoftTopology& sigma = p.target_topology();
  const bool homeo = is_soft_homeomorphism(f, tau, sigma);
  std::optional<HomeomorphismReport> eq;
  if (f.is_bijective()) eq = homeomorphism_equivalences(f, tau, sigma);
  if (o.json) {
    Json out = Json::object();
    out["command"] = "check-homeo";
    out["map"] = p.map->name;
    out["verdict"] = homeo;
    out["bijective"] = f.is_bijective();
    if (eq) {
      Json j = Json::object();
      j["homeomorphism"] = eq->homeomorphism;
      j["continuous_and_closed"] = eq->continuous_and_closed;
      j["continuous_and_open"] = eq->continuous_and_open;
      j["agree"] = eq->agreement.verdict;
      out["equivalences"] = std::move(j);
    }
    emit(out);
  } else {
    std::cout << "soft homeomorphism: " << tf(homeo) << "\n";
    if (eq) {
      std::cout << "continuous and closed: " << tf(eq->continuous_and_closed) << "; continuous and open: "
                << tf(eq->continuous_and_open) << "; agree: " << tf(eq->agreement.verdict) << "\n";
    } else {
      std::cout << "  (point map is not a bijection)\n";
    }
  }
  return homeo ? kTrue : kFalse;
}

int cmd_sweep(const Options& o) {
  const Theorem theorem = parse_theorem_id(o.theorem);
  SweepConfig config = SweepConfig::up_to(o.max_x, o.max_y, o.max_e);
  config.random_samples = o.samples;
  config.violation_limit = o.max_violations;
  std::vector<SweepInstance> extra;
  for (const auto& path : o.files) {
    const ProblemFile p = load_problem(path);
    if (p.map) {
      extra.push_back({p.source_topology(), p.target_topology(), p.mapping()});
    } else {
      for (const auto& t : p.topologies) extra.push_back({*t.topology, std::nullopt, std::nullopt});
    }
  }
  const TheoremSweepReport r = sweep_theorem(theorem, config, budget_of(o), extra);
  if (o.json) {
    emit(to_json(r));
  } else {
    std::cout << r.theorem << ": " << (r.holds() ? "holds" : "violated") << " (contexts=" << r.contexts
              << ", topologies=" << r.topologies << ", mappings=" << r.mappings << ", soft_sets=" << r.soft_sets
              << ", instances=" << r.instances << ", violations=" << r.violation_count << ")\n";
    for (const auto& v : r.violations) {
      std::cout << "--- " << v.description << "\n" << v.instance;
    }
  }
  return r.holds() ? kTrue : kFalse;
}

int cmd_enumerate(const Options& o) {
  std::optional<SoftContext> ctx;
  if (!o.file.empty()) {
    ctx = load_problem(o.file, ParseOptions{false}).context;
  } else {
    if (o.universe_size == 0 || o.parameter_count == 0)
      throw SoftError(Errc::kInvalidContext, "give a problem file or --universe-size and --parameter-count");
    ctx = synthetic_context('x', o.universe_size, o.parameter_count);
  }
  const EnumerationBudget budget = budget_of(o);
  const auto sets = enumerate_soft_sets(*ctx, budget);
  std::optional<std::vector<SoftTopology>> tops;
  if (ctx->cell_count() <= 4) tops = enumerate_soft_topologies(*ctx, budget);
  if (o.json) {
    Json out = Json::object();
    out["command"] = "enumerate";
    out["soft_sets"] = sets.size();
    if (tops) {
      out["topologies"] = tops->size();
      if (o.list) {
        Json list = Json::array();
        for (const auto& t : *tops) list.push_back(to_json(t));
        out["topology_list"] = std::move(list);
      }
    } else {
      out["topologies"] = nullptr;
    }
    emit(out);
  } else {
    std::cout << "soft sets: " << sets.size() << "\n";
    if (tops) {
      std::cout << "soft topologies: " << tops->size() << "\n";
      if (o.list)
        for (const auto& t : *tops) {
          std::cout << "  {";
          bool first = true;
          for (const auto& s : t.open_sets()) {
            std::cout << (first ? "" : ", ") << to_string(s);
            first = false;
          }
          std::cout << "}\n";
        }
    } else {
      std::cout << "soft topologies: not enumerable (|X|·|E| > 4)\n";
    }
  }
  return kTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks over finite soft topological spaces"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Emit one JSON document on stdout");
  app.add_option("--budget", o.budget, "Maximum number of soft sets to enumerate")->capture_default_str();
  app.add_option("--seed", o.seed, "Seed for randomized sampling")->capture_default_str();

  auto file_command = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "Problem file")->required()->check(CLI::ExistingFile);
    sub->add_option("--topology", o.topology, "Topology name (default: map source, else first)");
    return sub;
  };

  CLI::App* check_topology = file_command("check-topology", "Check the soft topology axioms");
  CLI::App* closure = file_command("closure", "Soft and parameterwise closure of a set or point");
  CLI::App* interior = file_command("interior", "Soft interior and interior points");
  for (CLI::App* sub : {closure, interior}) {
    sub->add_option("--set", o.set, "Soft set name (label, when --point is given)");
    sub->add_option("--point", o.point, "Soft point element@parameter");
  }
  CLI::App* param_topology = file_command("param-topology", "Induced topology at each parameter");
  param_topology->add_option("--param", o.param, "Only this parameter");
  CLI::App* check_continuous = file_command("check-continuous", "All six soft continuity conditions");
  CLI::App* check_open = file_command("check-open", "Soft open mapping check");
  CLI::App* check_closed = file_command("check-closed", "Soft closed mapping check");
  CLI::App* check_homeo = file_command("check-homeo", "Soft homeomorphism check");

  CLI::App* sweep = app.add_subcommand("sweep", "Exhaustive theorem sweep over small instances");
  sweep->add_option("theorem", o.theorem, "THM1 THM2 THM2_CONVERSE THM3 THM4 THM5 PROP1 PROP2 PROP3 COR1")->required();
  sweep->add_option("files", o.files, "Problem files whose instances join the sweep")->check(CLI::ExistingFile);
  sweep->add_option("--max-x", o.max_x, "Largest source universe")->capture_default_str();
  sweep->add_option("--max-y", o.max_y, "Largest target universe")->capture_default_str();
  sweep->add_option("--max-e", o.max_e, "Largest parameter set")->capture_default_str();
  sweep->add_option("--samples", o.samples, "Random instances over |X|=|Y|=3, |E|=2")->capture_default_str();
  sweep->add_option("--max-violations", o.max_violations, "Violations to list (0: all)")->capture_default_str();

  CLI::App* enumerate = app.add_subcommand("enumerate", "Count soft sets and soft topologies");
  enumerate->add_option("file", o.file, "Problem file supplying the context")->check(CLI::ExistingFile);
  enumerate->add_option("--universe-size", o.universe_size, "Synthetic universe size");
  enumerate->add_option("--parameter-count", o.parameter_count, "Synthetic parameter count");
  enumerate->add_flag("--list", o.list, "List every topology");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*check_topology) return cmd_check_topology(o);
    if (*closure) return cmd_closure(o, false);
    if (*interior) return cmd_closure(o, true);
    if (*param_topology) return cmd_param_topology(o);
    if (*check_continuous) return cmd_check_continuous(o);
    if (*check_open) return cmd_check_open_closed(o, true);
    if (*check_closed) return cmd_check_open_closed(o, false);
    if (*check_homeo) return cmd_check_homeo(o);
    if (*sweep) return cmd_sweep(o);
    if (*enumerate) return cmd_enumerate(o);
  } catch (const SoftError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
