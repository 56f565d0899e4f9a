#include "softtop/report.hpp"

namespace softtop {

Json to_json(const SoftSet& set) {
  const SoftContext& ctx = set.context();
  Json out = Json::object();
  for (std::size_t e = 0; e < ctx.parameter_count(); ++e) {
    Json members = Json::array();
    for (std::size_t x : set.at(e)) members.push_back(ctx.universe()[x]);
    out[ctx.parameters()[e]] = std::move(members);
  }
  return out;
}

Json to_json(const Witness& witness) {
  Json out = Json::object();
  out["name"] = witness.name;
  if (witness.set) out["set"] = to_json(*witness.set);
  if (!witness.detail.empty()) out["detail"] = witness.detail;
  return out;
}

Json to_json(const CheckReport& report) {
  Json out = Json::object();
  out["verdict"] = report.verdict;
  Json witnesses = Json::array();
  for (const auto& w : report.witnesses) witnesses.push_back(to_json(w));
  out["witnesses"] = std::move(witnesses);
  return out;
}

Json to_json(const PointTopology& topology, const SoftContext& ctx) {
  Json opens = Json::array();
  for (const auto& o : topology.opens()) {
    Json members = Json::array();
    for (std::size_t x : o.cells()) members.push_back(ctx.universe()[x]);
    opens.push_back(std::move(members));
  }
  return opens;
}

Json to_json(const SoftTopology& topology) {
  Json opens = Json::array();
  for (const auto& s : topology.open_sets()) opens.push_back(to_json(s));
  return opens;
}

Json to_json(const ContinuityReport& report) {
  Json conditions = Json::array();
  for (std::size_t i = 0; i < ContinuityReport::kConditions; ++i) {
    Json c = Json::object();
    c["condition"] = i + 1;
    if (report.conditions[i]) {
      c["verdict"] = *report.conditions[i];
    } else {
      c["verdict"] = nullptr;
      c["skipped"] = "instance exceeds the enumeration budget";
    }
    Json witnesses = Json::array();
    for (const auto& w : report.witnesses[i]) witnesses.push_back(to_json(w));
    c["witnesses"] = std::move(witnesses);
    conditions.push_back(std::move(c));
  }
  Json out = Json::object();
  out["soft_continuous"] = report.continuous();
  out["consistent"] = report.consistent();
  out["conditions"] = std::move(conditions);
  return out;
}

Json to_json(const TheoremSweepReport& report) {
  Json out = Json::object();
  out["theorem"] = report.theorem;
  out["holds"] = report.holds();
  Json counts = Json::object();
  counts["contexts"] = report.contexts;
  counts["topologies"] = report.topologies;
  counts["mappings"] = report.mappings;
  counts["soft_sets"] = report.soft_sets;
  counts["instances"] = report.instances;
  counts["violations"] = report.violation_count;
  out["counts"] = std::move(counts);
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    Json j = Json::object();
    j["description"] = v.description;
    j["instance"] = v.instance;
    violations.push_back(std::move(j));
  }
  out["violations"] = std::move(violations);
  return out;
}

TheoremSweepReport sweep_report_from_json(const Json& json) {
  TheoremSweepReport r;
  r.theorem = json.at("theorem").get<std::string>();
  const Json& counts = json.at("counts");
  r.contexts = counts.at("contexts").get<std::uint64_t>();
  r.topologies = counts.at("topologies").get<std::uint64_t>();
  r.mappings = counts.at("mappings").get<std::uint64_t>();
  r.soft_sets = counts.at("soft_sets").get<std::uint64_t>();
  r.instances = counts.at("instances").get<std::uint64_t>();
  r.violation_count = counts.at("violations").get<std::uint64_t>();
  for (const auto& v : json.at("violations"))
    r.violations.push_back({v.at("description").get<std::string>(), v.at("instance").get<std::string>()});
  return r;
}

}  // namespace softtop
