#pragma once

#include <json.hpp>

#include "bjlb/approx.hpp"

namespace bjlb::io {

using nlohmann::json;

// Measure: {"atoms":[label,...],"weights":[w,...]} with labels plain
// integers or arrays for product measures, plus "coords" when atoms carry
// coordinates.
json to_json(const DiscreteMeasure& mu);
DiscreteMeasure measure_from_json(const json& j);

// Space: {"field":"complex","dim":5,"kind":{"lp":2.0}}, kind shorthands
// "hilbert" and "scalar".
json to_json(const SmoothSpace& sp);
SmoothSpace space_from_json(const json& j, double max_exponent = 8.0);

// Vector: [[re,im],...] complex, [v,...] real.
json vec_to_json(const Vec& v, Field field);
Vec vec_from_json(const json& j, Field field);

// Bochner function: {"measure":..., "space":..., "values":[vector,...]}.
json to_json(const BochnerFunction& f);
BochnerFunction bochner_from_json(const json& j, double max_exponent = 8.0);

json to_json(const OrthoCertificate& c);

json to_json(const ApproxResult& r);

json to_json(const LightReport& r);

}  // namespace bjlb::io
