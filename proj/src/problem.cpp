#include "softtop/problem.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "softtop/error.hpp"

namespace softtop {
namespace {

constexpr std::string_view kNull = "null";
constexpr std::string_view kAbsolute = "absolute";

struct Line {
  std::size_t number = 0;
  std::string text;
};

struct Section {
  std::string kind;
  std::vector<std::string> args;
  std::size_t line = 0;
  std::vector<Line> body;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(std::move(w));
  return out;
}

[[noreturn]] void fail(Errc code, std::size_t line, const std::string& message) {
  throw SoftError(code, "line " + std::to_string(line) + ": " + message, line);
}

// Re-raise library errors with the line they arose on.
template <typename Fn>
auto at_line(std::size_t line, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const SoftError& e) {
    if (e.line() != 0) throw;
    std::string what = e.what();
    const auto colon = what.find(": ");
    fail(e.code(), line, colon == std::string::npos ? what : what.substr(colon + 2));
  }
}

bool is_reserved(std::string_view name) { return name == kNull || name == kAbsolute; }

std::vector<Section> split_sections(std::string_view text) {
  std::vector<Section> sections;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    std::string_view raw = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail(Errc::kSyntaxError, number, "unterminated section header");
      auto words = split_words(line.substr(1, line.size() - 2));
      if (words.empty()) fail(Errc::kSyntaxError, number, "empty section header");
      Section s;
      s.kind = words.front();
      s.args.assign(words.begin() + 1, words.end());
      s.line = number;
      sections.push_back(std::move(s));
      continue;
    }
    if (sections.empty()) fail(Errc::kSyntaxError, number, "content before the first section");
    sections.back().body.push_back({number, std::string(line)});
  }
  return sections;
}

// "key: value" with value possibly empty.
std::pair<std::string, std::string> key_value(const Line& line) {
  const auto colon = line.text.find(':');
  if (colon == std::string::npos) fail(Errc::kSyntaxError, line.number, "expected 'key: value'");
  auto key = std::string(trim(std::string_view(line.text).substr(0, colon)));
  if (key.empty()) fail(Errc::kSyntaxError, line.number, "missing key before ':'");
  return {std::move(key), std::string(trim(std::string_view(line.text).substr(colon + 1)))};
}

struct NamedHeader {
  std::string name;
  bool target = false;
};

NamedHeader named_header(const Section& s) {
  if (s.args.empty() || s.args.size() > 2) fail(Errc::kSyntaxError, s.line, "expected [" + s.kind + " NAME] or [" + s.kind + " NAME target]");
  if (s.args.size() == 2 && s.args[1] != "target") fail(Errc::kSyntaxError, s.line, "unknown section qualifier '" + s.args[1] + "'");
  return {s.args[0], s.args.size() == 2};
}

struct RawMap {
  std::string name;
  std::size_t line = 0;
  std::optional<std::vector<std::string>> target_universe;
  std::string source_topology;
  std::string target_topology;
  std::vector<std::pair<Line, std::pair<std::string, std::string>>> assignments;
};

SoftContext parse_context(const Section& s) {
  if (!s.args.empty()) fail(Errc::kSyntaxError, s.line, "[context] takes no arguments");
  std::optional<std::vector<std::string>> universe;
  std::optional<std::vector<std::string>> parameters;
  std::size_t universe_line = s.line;
  std::size_t parameters_line = s.line;
  for (const auto& line : s.body) {
    auto [key, value] = key_value(line);
    if (key != "universe" && key != "parameters") fail(Errc::kSyntaxError, line.number, "unknown context key '" + key + "'");
    const bool is_universe = key == "universe";
    auto& slot = is_universe ? universe : parameters;
    if (slot) fail(Errc::kSyntaxError, line.number, "duplicate '" + key + "'");
    slot = split_words(value);
    (is_universe ? universe_line : parameters_line) = line.number;
  }
  if (!universe) fail(Errc::kSyntaxError, s.line, "context is missing 'universe:'");
  if (!parameters) fail(Errc::kSyntaxError, s.line, "context is missing 'parameters:'");
  if (universe->empty()) fail(Errc::kInvalidContext, universe_line, "the universe must not be empty");
  if (parameters->empty()) fail(Errc::kInvalidContext, parameters_line, "the parameter set must not be empty");
  return at_line(s.line, [&] { return SoftContext(*universe, *parameters); });
}

RawMap parse_map(const Section& s) {
  if (s.args.size() != 1) fail(Errc::kSyntaxError, s.line, "expected [map NAME]");
  RawMap m;
  m.name = s.args[0];
  m.line = s.line;
  for (const auto& line : s.body) {
    if (const auto arrow = line.text.find("->"); arrow != std::string::npos) {
      auto lhs = split_words(std::string_view(line.text).substr(0, arrow));
      auto rhs = split_words(std::string_view(line.text).substr(arrow + 2));
      if (lhs.size() != 1 || rhs.size() != 1) fail(Errc::kSyntaxError, line.number, "expected 'element -> element'");
      m.assignments.push_back({line, {lhs[0], rhs[0]}});
      continue;
    }
    auto [key, value] = key_value(line);
    if (key == "target") {
      if (m.target_universe) fail(Errc::kSyntaxError, line.number, "duplicate 'target'");
      m.target_universe = split_words(value);
    } else if (key == "source-topology" || key == "target-topology") {
      auto words = split_words(value);
      if (words.size() != 1) fail(Errc::kSyntaxError, line.number, "'" + key + "' takes one topology name");
      auto& slot = key == "source-topology" ? m.source_topology : m.target_topology;
      if (!slot.empty()) fail(Errc::kSyntaxError, line.number, "duplicate '" + key + "'");
      slot = words[0];
    } else {
      fail(Errc::kSyntaxError, line.number, "unknown map key '" + key + "'");
    }
  }
  if (m.source_topology.empty()) fail(Errc::kSyntaxError, s.line, "map is missing 'source-topology:'");
  if (m.target_topology.empty()) fail(Errc::kSyntaxError, s.line, "map is missing 'target-topology:'");
  return m;
}

NamedSet parse_set(const Section& s, const ProblemFile& p) {
  const NamedHeader header = named_header(s);
  if (is_reserved(header.name)) fail(Errc::kSyntaxError, s.line, "'" + header.name + "' is a reserved name");
  if (header.target && !p.map) fail(Errc::kSyntaxError, s.line, "target-side set without a [map] section");
  const SoftContext& ctx = p.side(header.target);
  Assignment assignment;
  for (const auto& line : s.body) {
    auto [key, value] = key_value(line);
    if (assignment.count(key)) fail(Errc::kSyntaxError, line.number, "parameter '" + key + "' assigned twice");
    at_line(line.number, [&] { return ctx.parameter_index(key); });
    auto elements = split_words(value);
    for (const auto& x : elements) at_line(line.number, [&] { return ctx.element_index(x); });
    assignment.emplace(std::move(key), std::move(elements));
  }
  SoftSet set = at_line(s.line, [&] { return make_soft_set(ctx, assignment); });
  return {header.name, header.target, std::move(set)};
}

}  // namespace

SoftSet ProblemFile::resolve_set(std::string_view name, bool target_side) const {
  const SoftContext& ctx = side(target_side);
  if (name == kNull) return SoftSet::null(ctx);
  if (name == kAbsolute) return SoftSet::absolute(ctx);
  const bool same = target() == context;
  for (const auto& s : sets)
    if (s.name == name && (s.target == target_side || same)) return s.set;
  throw SoftError(Errc::kUnknownName, "no soft set named '" + std::string(name) + "'");
}

const NamedTopology& ProblemFile::find_topology(std::string_view name) const {
  for (const auto& t : topologies)
    if (t.name == name) return t;
  throw SoftError(Errc::kUnknownName, "no topology named '" + std::string(name) + "'");
}

const NamedTopology& ProblemFile::default_topology() const {
  if (map) return find_topology(map->source_topology);
  if (topologies.empty()) throw SoftError(Errc::kUnknownName, "problem declares no topology");
  return topologies.front();
}

const SoftTopology& ProblemFile::topology(std::string_view name) const {
  const NamedTopology& t = find_topology(name);
  if (!t.topology) throw SoftError(Errc::kAxiomViolation, "'" + t.name + "' is not a soft topology");
  return *t.topology;
}

const SoftTopology& ProblemFile::source_topology() const { return topology(mapping_block().source_topology); }
const SoftTopology& ProblemFile::target_topology() const { return topology(mapping_block().target_topology); }
const SoftMapping& ProblemFile::mapping() const { return mapping_block().mapping; }

const MapBlock& ProblemFile::mapping_block() const {
  if (!map) throw SoftError(Errc::kUnknownName, "problem declares no [map] section");
  return *map;
}

ProblemFile parse_problem(std::string_view text, const ParseOptions& options) {
  const auto sections = split_sections(text);

  const Section* context_section = nullptr;
  const Section* map_section = nullptr;
  for (const auto& s : sections) {
    if (s.kind == "context") {
      if (context_section) fail(Errc::kSyntaxError, s.line, "duplicate [context] section");
      context_section = &s;
    } else if (s.kind == "map") {
      if (map_section) fail(Errc::kSyntaxError, s.line, "only one [map] section is supported");
      map_section = &s;
    } else if (s.kind != "set" && s.kind != "topology") {
      fail(Errc::kSyntaxError, s.line, "unknown section [" + s.kind + "]");
    }
  }
  if (!context_section) fail(Errc::kSyntaxError, 1, "missing [context] section");

  ProblemFile p{parse_context(*context_section), std::nullopt, {}, {}, std::nullopt};
  std::optional<RawMap> raw_map;
  if (map_section) {
    raw_map = parse_map(*map_section);
    if (raw_map->target_universe)
      p.target_context = at_line(map_section->line, [&] { return SoftContext(*raw_map->target_universe, p.context.parameters()); });
    // Placeholder until the assignments are resolved below; identity-shaped maps
    // are not required to be valid here.
    p.map = MapBlock{raw_map->name, raw_map->source_topology, raw_map->target_topology,
                     SoftMapping(p.context, p.target(), std::vector<std::size_t>(p.context.universe_size(), 0))};
  }

  for (const auto& s : sections) {
    if (s.kind != "set") continue;
    NamedSet set = parse_set(s, p);
    for (const auto& other : p.sets)
      if (other.name == set.name && other.target == set.target) fail(Errc::kSyntaxError, s.line, "duplicate set '" + set.name + "'");
    p.sets.push_back(std::move(set));
  }

  for (const auto& s : sections) {
    if (s.kind != "topology") continue;
    const NamedHeader header = named_header(s);
    if (header.target && !p.map) fail(Errc::kSyntaxError, s.line, "target-side topology without a [map] section");
    for (const auto& other : p.topologies)
      if (other.name == header.name) fail(Errc::kSyntaxError, s.line, "duplicate topology '" + header.name + "'");
    NamedTopology t{header.name, header.target, {}, {}, std::nullopt};
    for (const auto& line : s.body) {
      for (auto& name : split_words(line.text)) {
        t.member_sets.push_back(at_line(line.number, [&] { return p.resolve_set(name, header.target); }));
        t.members.push_back(std::move(name));
      }
    }
    const SoftContext& ctx = p.side(header.target);
    const CheckReport report = validate_topology(ctx, t.member_sets);
    if (report.verdict) {
      t.topology.emplace(ctx, t.member_sets);
    } else if (options.validate_topologies) {
      fail(Errc::kAxiomViolation, s.line, "topology '" + t.name + "' is not a soft topology: " + to_string(report));
    }
    p.topologies.push_back(std::move(t));
  }

  if (raw_map) {
    const bool same = !p.target_context;
    auto check_side = [&](const std::string& name, bool target_side) {
      const NamedTopology& t = at_line(raw_map->line, [&]() -> const NamedTopology& { return p.find_topology(name); });
      if (!same && t.target != target_side)
        fail(Errc::kUnknownName, raw_map->line, "topology '" + name + "' is not over the map's " + (target_side ? "target" : "source"));
    };
    check_side(raw_map->source_topology, false);
    check_side(raw_map->target_topology, true);

    std::map<std::string, std::string, std::less<>> assignments;
    for (const auto& [line, xy] : raw_map->assignments) {
      if (!p.context.find_element(xy.first)) fail(Errc::kUnknownName, line.number, "'" + xy.first + "' is not in the source universe");
      if (!p.target().find_element(xy.second)) fail(Errc::kUnknownName, line.number, "'" + xy.second + "' is not in the target universe");
      if (!assignments.emplace(xy.first, xy.second).second) fail(Errc::kSyntaxError, line.number, "'" + xy.first + "' is assigned twice");
    }
    p.map->mapping = at_line(raw_map->line, [&] { return SoftMapping::from_names(p.context, p.target(), assignments); });
  }
  return p;
}

ProblemFile load_problem(const std::filesystem::path& path, const ParseOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SoftError(Errc::kSyntaxError, "cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_problem(buffer.str(), options);
}

std::string serialize(const ProblemFile& p) {
  std::ostringstream out;
  auto join = [](const std::vector<std::string>& words) {
    std::string s;
    for (const auto& w : words) s += (s.empty() ? "" : " ") + w;
    return s;
  };
  auto with_space = [](const std::string& s) { return s.empty() ? std::string() : " " + s; };

  out << "[context]\n";
  out << "universe:" << with_space(join(p.context.universe())) << "\n";
  out << "parameters:" << with_space(join(p.context.parameters())) << "\n";

  const bool tagged = p.target_context.has_value();
  for (const auto& s : p.sets) {
    out << "\n[set " << s.name << (s.target && tagged ? " target" : "") << "]\n";
    const SoftContext& ctx = s.set.context();
    for (std::size_t e = 0; e < ctx.parameter_count(); ++e) {
      std::vector<std::string> names;
      for (std::size_t x : s.set.at(e)) names.push_back(ctx.universe()[x]);
      out << ctx.parameters()[e] << ":" << with_space(join(names)) << "\n";
    }
  }
  for (const auto& t : p.topologies) {
    out << "\n[topology " << t.name << (t.target && tagged ? " target" : "") << "]\n";
    out << join(t.members) << "\n";
  }
  if (p.map) {
    out << "\n[map " << p.map->name << "]\n";
    if (p.target_context) out << "target:" << with_space(join(p.target_context->universe())) << "\n";
    out << "source-topology: " << p.map->source_topology << "\n";
    out << "target-topology: " << p.map->target_topology << "\n";
    const SoftMapping& f = p.map->mapping;
    for (std::size_t x = 0; x < f.source().universe_size(); ++x)
      out << f.source().universe()[x] << " -> " << f.target().universe()[f(x)] << "\n";
  }
  return out.str();
}

bool operator==(const ProblemFile& a, const ProblemFile& b) {
  if (!(a.context == b.context) || a.target_context.has_value() != b.target_context.has_value()) return false;
  if (a.target_context && !(*a.target_context == *b.target_context)) return false;
  if (a.sets.size() != b.sets.size() || a.topologies.size() != b.topologies.size()) return false;
  const bool tagged = a.target_context.has_value();
  for (std::size_t i = 0; i < a.sets.size(); ++i) {
    const auto& x = a.sets[i];
    const auto& y = b.sets[i];
    if (x.name != y.name || (tagged && x.target != y.target) || !(x.set == y.set)) return false;
  }
  for (std::size_t i = 0; i < a.topologies.size(); ++i) {
    const auto& x = a.topologies[i];
    const auto& y = b.topologies[i];
    if (x.name != y.name || (tagged && x.target != y.target) || x.members != y.members || x.topology != y.topology) return false;
  }
  if (a.map.has_value() != b.map.has_value()) return false;
  if (a.map) {
    const auto& x = *a.map;
    const auto& y = *b.map;
    if (x.name != y.name || x.source_topology != y.source_topology || x.target_topology != y.target_topology) return false;
    if (!std::equal(x.mapping.point_map().begin(), x.mapping.point_map().end(), y.mapping.point_map().begin(),
                    y.mapping.point_map().end()))
      return false;
  }
  return true;
}

ProblemFile make_instance(const SoftTopology& tau, const SoftTopology* sigma, const SoftMapping* f,
                          const std::vector<std::pair<std::string, SoftSet>>& extra_sets) {
  ProblemFile p{tau.context(), std::nullopt, {}, {}, std::nullopt};
  if (f != nullptr && !(f->target() == f->source())) p.target_context = f->target();

  auto add_topology = [&](const SoftTopology& t, const std::string& name, const std::string& prefix, bool target_side) {
    NamedTopology named{name, target_side, {}, {}, t};
    std::size_t k = 0;
    for (const auto& cells : t.open_cells()) {
      SoftSet set(t.context(), cells);
      std::string member;
      if (set.is_null()) {
        member = std::string(kNull);
      } else if (set.is_absolute()) {
        member = std::string(kAbsolute);
      } else {
        member = prefix + std::to_string(++k);
        p.sets.push_back({member, target_side, set});
      }
      named.members.push_back(member);
      named.member_sets.push_back(std::move(set));
    }
    p.topologies.push_back(std::move(named));
  };

  add_topology(tau, "tau", "U", false);
  if (sigma != nullptr) add_topology(*sigma, "sigma", "V", true);
  for (const auto& [name, set] : extra_sets) p.sets.push_back({name, !(set.context() == tau.context()), set});
  if (f != nullptr) p.map = MapBlock{"f", "tau", sigma != nullptr ? "sigma" : "tau", *f};
  return p;
}

}  // namespace softtop
