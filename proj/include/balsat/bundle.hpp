#pragma once

#include <string>

#include <json.hpp>

#include "balsat/family.hpp"
#include "balsat/metrics.hpp"
#include "balsat/turan.hpp"

namespace balsat {

using Json = nlohmann::ordered_json;

Json to_json(const Hypergraph& g);
Hypergraph hypergraph_from_json(const Json& j);

/// Rationals are written as "p/q" strings so they round-trip exactly.
Json to_json(const DensityReport& report);
Json to_json(const ExponentSet& exponents);
Json to_json(const BuildReport& report);
Json to_json(const Certificate& certificate);
Json to_json(const ExtremalRecord& record);

/// Certificate bundle for a built family: config, params, host, pattern, members,
/// per-size degree maxima, the certificate and the build report.
Json family_bundle(const CopyFamily& family, const BuildReport& report, const Certificate& certificate,
                   const Json& config);

/// Rebuilds a family from a bundle. Members are taken as written (no validation here;
/// verify_certificate does that). Throws std::invalid_argument on malformed input.
CopyFamily family_from_bundle(const Json& bundle);

}  // namespace balsat
