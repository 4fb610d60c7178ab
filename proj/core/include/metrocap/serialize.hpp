#pragma once

// JSON forms of the library's reports. Big integers travel as decimal
// strings and probabilities as "num/den" strings so nothing is rounded.

#include "metrocap/capacity.hpp"
#include "metrocap/distinguish.hpp"
#include "metrocap/rep_core.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>

namespace metrocap {

inline constexpr const char *kSchemaVersion = "1";

nlohmann::json to_json(const Decomposition &d);
Decomposition decomposition_from_json(const nlohmann::json &j);

nlohmann::json to_json(const CapacityReport &r, LogBase base = LogBase::Natural);

/// Field names carry the unit: lower_nats/upper_nats or lower_bits/upper_bits.
nlohmann::json to_json(const RenyiBounds &b, LogBase base = LogBase::Natural);

/// List of phase vectors in radians.
nlohmann::json to_json(const LatticeCodebook &c);

struct ExperimentRecord {
    Model model = Model::MultiPhase;
    int n = 0;
    int t = 0;
    std::string state_tag;
    std::string codebook_tag;
    std::uint64_t seed = 0;
    double success_prob = 0.0;
    double entropy_nats = 0.0;
};

nlohmann::json to_json(const ExperimentRecord &e);

/// Unit suffix used in field names: "nats" or "bits".
std::string unit_suffix(LogBase base);

}  // namespace metrocap
