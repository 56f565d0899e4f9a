#pragma once

// Problem files: a line-oriented description of a soft context, named soft
// sets, named topologies and an optional mapping.
//
//   [context]
//   universe: h1 h2 h3
//   parameters: e1 e2
//
//   [set F1]
//   e1: h1 h2
//   e2: h3
//
//   [topology tau]
//   null absolute F1
//
//   [map f]
//   target: a b              # omitted: the map goes into the same universe
//   source-topology: tau
//   target-topology: sigma
//   h1 -> a
//
// Sets and topologies over the map's target universe are tagged:
// `[set G1 target]`, `[topology sigma target]`. `null` and `absolute` are
// reserved names for the null and absolute soft sets of either side.
// `#` starts a comment.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "softtop/mapping.hpp"
#include "softtop/soft_set.hpp"
#include "softtop/topology.hpp"

namespace softtop {

struct NamedSet {
  std::string name;
  bool target = false;
  SoftSet set;
};

struct NamedTopology {
  std::string name;
  bool target = false;
  std::vector<std::string> members;
  // Resolved members in declaration order.
  std::vector<SoftSet> member_sets;
  // Empty only when parsed without validation and the axioms fail.
  std::optional<SoftTopology> topology;
};

struct MapBlock {
  std::string name;
  std::string source_topology;
  std::string target_topology;
  SoftMapping mapping;
};

struct ProblemFile {
  SoftContext context;
  // Set when the map block declares its own target universe.
  std::optional<SoftContext> target_context;
  std::vector<NamedSet> sets;
  std::vector<NamedTopology> topologies;
  std::optional<MapBlock> map;

  const SoftContext& target() const noexcept { return target_context ? *target_context : context; }
  const SoftContext& side(bool target_side) const noexcept { return target_side ? target() : context; }

  // Resolves reserved names too. kUnknownName if absent.
  SoftSet resolve_set(std::string_view name, bool target_side = false) const;
  const NamedTopology& find_topology(std::string_view name) const;
  // The map's source topology, else the first declared topology.
  const NamedTopology& default_topology() const;
  // Validated topology or kAxiomViolation.
  const SoftTopology& topology(std::string_view name) const;

  const SoftTopology& source_topology() const;
  const SoftTopology& target_topology() const;
  const SoftMapping& mapping() const;
  // kUnknownName when there is no map.
  const MapBlock& mapping_block() const;
};

struct ParseOptions {
  // Reject topologies failing the axioms with kAxiomViolation.
  bool validate_topologies = true;
};

// Errors: kSyntaxError, kUnknownName, kUnknownElement, kUnknownParameter,
// kMissingParameter, kInvalidContext, kAxiomViolation; all carry the line.
ProblemFile parse_problem(std::string_view text, const ParseOptions& options = {});
ProblemFile load_problem(const std::filesystem::path& path, const ParseOptions& options = {});

// Canonical text; parse_problem(serialize(p)) reproduces p.
std::string serialize(const ProblemFile& problem);

bool operator==(const ProblemFile& a, const ProblemFile& b);

// A self-contained problem for one instance: topology `tau` (and `sigma`,
// map `f` when given) plus extra named soft sets.
ProblemFile make_instance(const SoftTopology& tau, const SoftTopology* sigma, const SoftMapping* f,
                          const std::vector<std::pair<std::string, SoftSet>>& extra_sets = {});

}  // namespace softtop
