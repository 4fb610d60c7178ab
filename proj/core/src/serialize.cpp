#include "metrocap/serialize.hpp"

#include <stdexcept>

namespace metrocap {

using nlohmann::json;

std::string unit_suffix(LogBase base) { return base == LogBase::Two ? "bits" : "nats"; }

json to_json(const Decomposition &d) {
    json entries = json::array();
    for (const auto &e : d.entries) {
        entries.push_back({
            {"label", e.label},
            {"dim", to_decimal(e.dim)},
            {"mult", to_decimal(e.mult)},
            {"eff_mult", to_decimal(e.eff_mult)},
        });
    }
    return {
        {"schema", kSchemaVersion},
        {"model", to_string(d.model)},
        {"n", d.n},
        {"t", d.t},
        {"l", d.l.to_string()},
        {"entries", std::move(entries)},
    };
}

Decomposition decomposition_from_json(const json &j) {
    Decomposition d;
    d.model = parse_model(j.at("model").get<std::string>());
    d.n = j.at("n").get<int>();
    d.t = j.at("t").get<int>();
    const auto &l = j.at("l");
    d.l = ReferenceDim::parse(l.is_string() ? l.get<std::string>() : std::to_string(l.get<std::uint64_t>()));
    for (const auto &e : j.at("entries")) {
        IrrepEntry entry;
        entry.label = e.at("label").get<std::vector<int>>();
        entry.dim = BigInt(e.at("dim").get<std::string>());
        entry.mult = BigInt(e.at("mult").get<std::string>());
        entry.eff_mult = BigInt(e.at("eff_mult").get<std::string>());
        d.entries.push_back(std::move(entry));
    }
    return d;
}

json to_json(const CapacityReport &r, LogBase base) {
    json p = json::array();
    for (const auto &b : r.optimal_p) {
        p.push_back({{"label", b.label}, {"p", to_fraction(b.p)}});
    }
    return {
        {"schema", kSchemaVersion},
        {"model", to_string(r.model)},
        {"n", r.n},
        {"t", r.t},
        {"l", r.l.to_string()},
        {"log_base", to_string(base)},
        {"value", r.value(base)},
        {"support", to_decimal(r.support)},
        {"optimal_p", std::move(p)},
    };
}

json to_json(const RenyiBounds &b, LogBase base) {
    const std::string unit = unit_suffix(base);
    return {
        {"schema", kSchemaVersion},
        {"alpha", b.alpha},
        {"beta", b.beta},
        {"epsilon", b.epsilon},
        {"lower_" + unit, in_base(b.lower_log_M, base)},
        {"upper_" + unit, in_base(b.upper_log_M, base)},
    };
}

json to_json(const LatticeCodebook &c) { return c.all_phases(); }

json to_json(const ExperimentRecord &e) {
    return {
        {"schema", kSchemaVersion},
        {"model", to_string(e.model)},
        {"n", e.n},
        {"t", e.t},
        {"state_tag", e.state_tag},
        {"codebook_tag", e.codebook_tag},
        {"seed", e.seed},
        {"success_prob", e.success_prob},
        {"entropy_nats", e.entropy_nats},
    };
}

}  // namespace metrocap
