#pragma once

#include <json.hpp>

#include "glauber/dynamics.hpp"
#include "glauber/verification.hpp"
#include "glauber/weight_model.hpp"
#include "glauber/width.hpp"

namespace glauber {

/// {"family":"rc","q":2.0,"mu":1.0}, {"family":"multi_tutte","q":1.5,"v":[...]},
/// {"family":"upoly","y":2.0,"x":[...]}, {"family":"tutte"|"interlace","x":..,"y":..}, {"family":"r2","q":..,"mu":..}.
/// Throws ModelError on unknown families, missing or extra keys, or invalid values.
WeightModel model_from_json(const nlohmann::json& spec);
nlohmann::json to_json(const WeightModel& model);

nlohmann::json to_json(const Subset& s);  // hex bitmask string
nlohmann::json to_json(const Ordering& o);
nlohmann::json to_json(const CongestionReport& r);
nlohmann::json to_json(const LemmaReport& r);
nlohmann::json to_json(const MultiplicativityReport& r);
nlohmann::json to_json(const MixingReport& r, bool include_curve = false);

nlohmann::json sample_record(std::size_t step, const Subset& s, double log_weight);

}  // namespace glauber
