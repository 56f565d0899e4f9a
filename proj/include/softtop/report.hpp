#pragma once

// JSON renderings of library results. Objects keep insertion order so output
// is byte-stable.

#include <json.hpp>

#include "softtop/mapping.hpp"
#include "softtop/oracle.hpp"
#include "softtop/soft_set.hpp"
#include "softtop/topology.hpp"

namespace softtop {

using Json = nlohmann::ordered_json;

Json to_json(const SoftSet& set);
Json to_json(const Witness& witness);
Json to_json(const CheckReport& report);
Json to_json(const PointTopology& topology, const SoftContext& ctx);
Json to_json(const SoftTopology& topology);
Json to_json(const ContinuityReport& report);
Json to_json(const TheoremSweepReport& report);

// Inverse of to_json(TheoremSweepReport); used to check report round trips.
TheoremSweepReport sweep_report_from_json(const Json& json);

}  // namespace softtop
