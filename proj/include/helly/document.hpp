#pragma once

#include "helly/bounds.hpp"
#include "helly/constructions.hpp"
#include "helly/search.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace helly {

using json = nlohmann::ordered_json;

// Stable machine-readable documents, each carrying a "format" version field.
// Vertices serialize as exponent/index pairs, so round-trips are bit-exact.

json polygon_to_json(const Polygon& poly,
                     const EmptinessCertificate* cert = nullptr);
Polygon polygon_from_json(const json& doc);

json construction_to_json(const ConstructionReport& report);
json search_result_to_json(const LatticeSpec& spec, const SearchConfig& cfg,
                           const SearchResult& result);
json bound_report_to_json(const BoundReport& report);

std::string regime_name(Regime regime);

// SVG figure of the polygon over its lattice window; log-log scaling keeps
// exponential constructions visible (coordinates in the figure are decimal
// approximations and play no part in verification)
std::string render_svg(const Polygon& poly, bool log_scale = true);

}  // namespace helly
