#pragma once

#include <string_view>

#include <nlohmann/json.hpp>

#include "playbench/config.hpp"
#include "playbench/kmeans.hpp"
#include "playbench/session.hpp"
#include "playbench/trace.hpp"

// JSON schemas shared by the trace exporter, the CLI and the HTTP service.
// Objects keep insertion order so serialized output is stable and readable.
namespace playbench {

using Json = nlohmann::ordered_json;

Json config_to_json(const SessionConfig& config);
/// Strict parser: unknown keys, wrong types and inconsistent values all raise
/// Error(invalid_config) naming every offending field.
SessionConfig config_from_json(const Json& j);

Json record_to_json(const IterationRecord& record);
/// Throws Error(invalid_input) on a malformed record.
IterationRecord record_from_json(const Json& j);

/// {"points":[[x,y],...],"centers":[[x,y],...],"clusters":[i,...],"colors":["#RRGGBB",...]}
Json kmeans_to_json(const KMeansResult& result);

Json state_to_json(const ModelState& state);
Json table_to_json(const TruthTable& table);

Json trace_to_json(const TrainingTrace& trace);
TrainingTrace trace_from_json(const Json& j);

/// Parses text, mapping syntax errors to Error(invalid_config) with field "body".
Json parse_json_body(std::string_view text);

}  // namespace playbench
