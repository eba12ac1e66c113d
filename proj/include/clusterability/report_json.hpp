#pragma once

#include <json.hpp>

#include "clusterability/analytics.hpp"
#include "clusterability/engine.hpp"
#include "clusterability/generators.hpp"
#include "clusterability/oracle.hpp"
#include "clusterability/verifier.hpp"

namespace clusterability::report {

using nlohmann::json;

inline constexpr int schema_version = 1;

json to_json(const GapRequirement& req);
json to_json(const ClusterStats& stats);
json to_json(const CoreProfile& core);
json to_json(const ClusterabilityVerdict& verdict);  // carries schema_version
json to_json(const PlantedDataset& planted);        // manifest without the points
json to_json(const CounterexampleReport& rep);      // carries schema_version
json to_json(const RunResult& run);                 // carries schema_version
json to_json(const SeedingAnalysis& analysis);
json to_json(const Histogram& histogram);
json to_json(const OracleResult& result);

}  // namespace clusterability::report
