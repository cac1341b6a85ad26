#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "folnewt/decision.hpp"
#include "json.hpp"

namespace folnewt {

inline constexpr std::string_view report_schema_version = "1.0";

/// 64-bit FNV-1a digest of the input bytes, as 16 lowercase hex digits.
std::string fnv1a64_hex(std::string_view bytes);

nlohmann::json to_json(const LabelSet& labels);
nlohmann::json to_json(const std::vector<Polynomial>& polys);
nlohmann::json to_json(const Face& face);
nlohmann::json to_json(const Witness& witness);
nlohmann::json to_json(const Verdict& verdict);
nlohmann::json to_json(const PolyhedraSystem& system);
nlohmann::json to_json(const LogsingResult& result);
nlohmann::json to_json(const groebner::FuelUsage& usage);
nlohmann::json to_json(const LogFormChart& chart);
/// Every chart of the tree plus the blow-up log.
nlohmann::json atlas_json(const Atlas& atlas);
nlohmann::json blowup_log_json(const Atlas& atlas);

/// Skeleton shared by every command: schema version, command, digest.
nlohmann::json report_header(std::string_view command, std::string_view input_text);

/// Graphviz rendering of the chart tree. Nodes carry divisor sets; leaves
/// also list the vertices of their per-stratum polyhedra. Edges are labeled
/// by the chart selector.
std::string atlas_dot(const Atlas& atlas);

/// Short human-readable rendering of a report, for --text.
std::string render_text(const nlohmann::json& report);

}  // namespace folnewt
