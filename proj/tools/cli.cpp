#include "cli.hpp"

#include "metrocap/distinguish.hpp"
#include "metrocap/oracle.hpp"
#include "metrocap/serialize.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <vector>

namespace metrocap::cli {

using nlohmann::json;

namespace {

const char *command_name(Command c) {
    switch (c) {
        case Command::Decompose:
            return "decompose";
        case Command::Capacity:
            return "capacity";
        case Command::Bounds:
            return "bounds";
        case Command::Simulate:
            return "simulate";
        case Command::Scaling:
            return "scaling";
    }
    return "?";
}

Format parse_format(const std::string &text) {
    if (text == "json") {
        return Format::Json;
    }
    if (text == "csv") {
        return Format::Csv;
    }
    throw ValidationError("unknown format '" + text + "' (expected json or csv)");
}

ReferenceDim effective_l(const RunConfig &c) {
    if (c.l) {
        return *c.l;
    }
    return c.model == Model::SpecialUnitary ? ReferenceDim::unbounded() : ReferenceDim::of(1);
}

std::string default_state(Model m) { return m == Model::MultiPhase ? "bs4" : "bn1"; }
std::string default_codebook(Model m) { return m == Model::MultiPhase ? "lattice" : "haar"; }

void check_su_enumeration(int n, int t) {
    if (count_partitions(n, t) > kMaxPartitionCount) {
        throw ValidationError("cap exceeded: more than " + std::to_string(kMaxPartitionCount) +
                              " Young diagrams for n=" + std::to_string(n) + ", t=" + std::to_string(t));
    }
}

void check_simulation_caps(const RunConfig &c) {
    const std::string state = c.state.empty() ? default_state(c.model) : c.state;
    const std::string codebook = c.codebook.empty() ? default_codebook(c.model) : c.codebook;
    if (state != "bs4" && state != "noon" && state != "bn1") {
        throw ValidationError("unknown state '" + state + "' (expected bs4, noon or bn1)");
    }
    if (codebook != "lattice" && codebook != "haar") {
        throw ValidationError("unknown codebook '" + codebook + "' (expected lattice or haar)");
    }
    if (c.t != 2) {
        throw ValidationError("simulate supports t = 2 only");
    }
    if (c.n < 1) {
        throw ValidationError("simulate needs n >= 1");
    }
    if (c.model == Model::MultiPhase) {
        if (c.n > 12) {
            throw ValidationError("oracle cap exceeded: mp simulation needs t^n <= " +
                                  std::to_string(oracle::kMaxMpDimension) + " (n <= 12 for t = 2)");
        }
        if (state == "bn1") {
            throw ValidationError("state bn1 applies to the su model");
        }
        if (codebook != "lattice") {
            throw ValidationError("the mp model uses the lattice codebook");
        }
    } else {
        if (c.n > oracle::kMaxSu2Copies) {
            throw ValidationError("oracle cap exceeded: su simulation needs n <= " +
                                  std::to_string(oracle::kMaxSu2Copies));
        }
        if (codebook != "haar") {
            throw ValidationError("codebook lattice applies to the mp model");
        }
    }
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string csv_cell(const json &v) {
    if (v.is_null()) {
        return "";
    }
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_number_float()) {
        return format_double(v.get<double>());
    }
    if (v.is_array()) {
        std::string out;
        for (const auto &x : v) {
            out += (out.empty() ? "" : " ") + csv_cell(x);
        }
        return out;
    }
    return v.dump();
}

std::string csv_table(const std::vector<std::string> &header, const std::vector<std::vector<json>> &rows) {
    std::ostringstream os;
    for (std::size_t i = 0; i < header.size(); ++i) {
        os << (i ? "," : "") << header[i];
    }
    os << '\n';
    for (const auto &row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << (i ? "," : "") << csv_cell(row[i]);
        }
        os << '\n';
    }
    return os.str();
}

json decompose_report(const RunConfig &c) {
    json j = to_json(decompose(c.model, c.n, c.t, effective_l(c)));
    j["command"] = "decompose";
    return j;
}

json capacity_report(const RunConfig &c) {
    const Decomposition d = decompose(c.model, c.n, c.t, effective_l(c));
    json j = to_json(capacity(d), c.base);
    j["command"] = "capacity";
    const double baseline = c.n >= 1 ? 0.5 * parameter_count(c.model, c.t) * std::log(static_cast<double>(c.n)) : 0.0;
    j["baseline"] = in_base(baseline, c.base);
    return j;
}

json bounds_report(const RunConfig &c) {
    const ReferenceDim l = effective_l(c);
    const Decomposition d = decompose(c.model, c.n, c.t, l);
    RenyiBounds b;
    if (c.alpha || c.beta) {
        if (!c.alpha || !c.beta) {
            throw ValidationError("--alpha and --beta must be given together");
        }
        // The optimal twirled state is flat on its support, so every Renyi
        // entropy equals the capacity.
        const double r = capacity(d).value_nats;
        b = m_bounds_general(r, r, *c.alpha, *c.beta, c.eps);
    } else {
        b = m_eps_capacity_bounds(d, c.eps);
    }
    json j = to_json(b, c.base);
    j["command"] = "bounds";
    j["model"] = to_string(c.model);
    j["n"] = c.n;
    j["t"] = c.t;
    j["l"] = l.to_string();
    if (c.model == Model::MultiPhase && c.n >= 1) {
        const LatticeCodebook lattice = mp_lattice(c.n, c.t);
        const int t = c.t;
        j["lattice_size"] = lattice.size();
        j["radius_rad"] = radius_bound(static_cast<double>(lattice.size()),
                                       [t](double r) { return ball_volume_mp(r, t); });
    } else {
        j["lattice_size"] = nullptr;
        j["radius_rad"] = nullptr;
    }
    return j;
}

json simulate_report(const RunConfig &c) {
    const std::string state_tag = c.state.empty() ? default_state(c.model) : c.state;
    const std::string codebook_tag = c.codebook.empty() ? default_codebook(c.model) : c.codebook;

    const oracle::PureState psi = state_tag == "bs4"    ? oracle::bs4_state(c.n)
                                  : state_tag == "noon" ? oracle::noon_state(c.n)
                                                        : oracle::bn1_state_su2(c.n);
    const oracle::Codebook codebook =
        codebook_tag == "lattice"
            ? oracle::Codebook::from_lattice(mp_lattice(c.n, c.t))
            : oracle::Codebook::haar_su2(c.codebook_size ? c.codebook_size : static_cast<std::size_t>(c.n + 1), c.seed);

    const oracle::SrmResult srm = oracle::srm_discrimination(codebook, psi, c.n, c.t);
    ExperimentRecord rec;
    rec.model = c.model;
    rec.n = c.n;
    rec.t = c.t;
    rec.state_tag = state_tag;
    rec.codebook_tag = codebook_tag;
    rec.seed = c.seed;
    rec.success_prob = srm.success_prob;
    rec.entropy_nats = oracle::empirical_mi(psi, c.model, c.n, c.t);

    json j = to_json(rec);
    if (c.base == LogBase::Two) {
        j.erase("entropy_nats");
        j["entropy_bits"] = in_base(rec.entropy_nats, c.base);
    }
    j["command"] = "simulate";
    j["codebook_size"] = srm.codebook_size;
    j["degenerate"] = srm.degenerate;
    return j;
}

json scaling_report(const RunConfig &c) {
    if (!c.n_range) {
        throw ValidationError("scaling needs --n-range start:stop:stride");
    }
    const ReferenceDim l = effective_l(c);
    const auto rows = capacity_sweep(c.model, c.t, l, c.n_range->start, c.n_range->stop, c.n_range->stride);
    json points = json::array();
    std::vector<std::pair<double, double>> fit;
    for (const auto &r : rows) {
        points.push_back({{"n", r.n}, {"capacity", in_base(r.capacity_nats, c.base)},
                          {"baseline", in_base(r.baseline_nats, c.base)}});
        fit.emplace_back(static_cast<double>(r.n), r.capacity_nats);
    }
    json j = {
        {"schema", kSchemaVersion},
        {"command", "scaling"},
        {"model", to_string(c.model)},
        {"t", c.t},
        {"l", l.to_string()},
        {"log_base", to_string(c.base)},
        {"points", std::move(points)},
    };
    // Exponent of n, independent of the log base.
    j["fitted_slope"] = fit.size() >= 3 ? json(scaling_fit(fit)) : json(nullptr);
    return j;
}

void add_common(CLI::App *sub, RunConfig &c, std::string &model, std::string &l, std::string &base,
                std::string &format) {
    sub->add_option("--model", model, "mp or su")->required();
    sub->add_option("--t", c.t, "local dimension");
    sub->add_option("--l", l, "reference dimension (positive integer or inf)");
    sub->add_option("--base", base, "logarithm base: e or 2");
    sub->add_option("--format", format, "json or csv (default from METROCAP_FORMAT)");
}

}  // namespace

NRange NRange::parse(const std::string &text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ':')) {
        try {
            std::size_t used = 0;
            parts.push_back(std::stoi(piece, &used));
            if (used != piece.size()) {
                throw std::invalid_argument(piece);
            }
        } catch (const std::exception &) {
            throw ValidationError("bad --n-range '" + text + "' (expected start:stop:stride)");
        }
    }
    if (parts.size() < 2 || parts.size() > 3) {
        throw ValidationError("bad --n-range '" + text + "' (expected start:stop:stride)");
    }
    NRange r{parts[0], parts[1], parts.size() == 3 ? parts[2] : 1};
    if (r.start < 1 || r.stop < r.start || r.stride < 1) {
        throw ValidationError("bad --n-range '" + text + "': need 1 <= start <= stop and stride >= 1");
    }
    return r;
}

void validate(const RunConfig &c) {
    if (c.t < 1 || c.t > kMaxLocalDim) {
        throw ValidationError("t must lie in [1, " + std::to_string(kMaxLocalDim) + "]");
    }
    if (c.command != Command::Scaling && (c.n < 0 || c.n > kMaxCopies)) {
        throw ValidationError("n must lie in [0, " + std::to_string(kMaxCopies) + "]");
    }
    if (c.command == Command::Bounds && !(c.eps > 0.0 && c.eps < 1.0)) {
        throw ValidationError("--eps must lie in (0, 1)");
    }
    if (c.alpha && !(*c.alpha > 1.0 && *c.alpha <= 2.0)) {
        throw ValidationError("--alpha must lie in (1, 2]");
    }
    if (c.beta && !(*c.beta > 0.0 && *c.beta < 1.0)) {
        throw ValidationError("--beta must lie in (0, 1)");
    }
    switch (c.command) {
        case Command::Decompose:
        case Command::Capacity:
        case Command::Bounds:
            if (c.model == Model::SpecialUnitary) {
                check_su_enumeration(c.n, c.t);
            }
            break;
        case Command::Simulate:
            check_simulation_caps(c);
            break;
        case Command::Scaling:
            if (!c.n_range) {
                throw ValidationError("scaling needs --n-range start:stop:stride");
            }
            if (c.n_range->stop > kMaxCopies) {
                throw ValidationError("n must lie in [1, " + std::to_string(kMaxCopies) + "]");
            }
            if (c.model == Model::SpecialUnitary) {
                check_su_enumeration(c.n_range->stop, c.t);
            }
            break;
    }
}

json report_json(const RunConfig &c) {
    switch (c.command) {
        case Command::Decompose:
            return decompose_report(c);
        case Command::Capacity:
            return capacity_report(c);
        case Command::Bounds:
            return bounds_report(c);
        case Command::Simulate:
            return simulate_report(c);
        case Command::Scaling:
            return scaling_report(c);
    }
    throw ValidationError("unknown command");
}

std::string csv_from_json(const json &r) {
    const std::string command = r.at("command").get<std::string>();
    if (command == "decompose") {
        std::vector<std::vector<json>> rows;
        for (const auto &e : r.at("entries")) {
            rows.push_back({r["model"], r["n"], r["t"], r["l"], e["label"], e["dim"], e["mult"], e["eff_mult"]});
        }
        return csv_table({"model", "n", "t", "l", "label", "dim", "mult", "eff_mult"}, rows);
    }
    if (command == "capacity") {
        const std::string unit = r.at("log_base") == "2" ? "bits" : "nats";
        return csv_table({"model", "n", "t", "l", "capacity_" + unit, "baseline_" + unit},
                         {{r["model"], r["n"], r["t"], r["l"], r["value"], r["baseline"]}});
    }
    if (command == "bounds") {
        const std::string unit = r.contains("lower_bits") ? "bits" : "nats";
        return csv_table({"model", "n", "t", "l", "alpha", "beta", "epsilon", "lower_" + unit, "upper_" + unit,
                          "lattice_size", "radius_rad"},
                         {{r["model"], r["n"], r["t"], r["l"], r["alpha"], r["beta"], r["epsilon"],
                           r["lower_" + unit], r["upper_" + unit], r["lattice_size"], r["radius_rad"]}});
    }
    if (command == "simulate") {
        const std::string entropy = r.contains("entropy_bits") ? "entropy_bits" : "entropy_nats";
        return csv_table({"model", "n", "t", "state_tag", "codebook_tag", "seed", "codebook_size", "success_prob",
                          entropy},
                         {{r["model"], r["n"], r["t"], r["state_tag"], r["codebook_tag"], r["seed"],
                           r["codebook_size"], r["success_prob"], r[entropy]}});
    }
    if (command == "scaling") {
        const std::string unit = r.at("log_base") == "2" ? "bits" : "nats";
        std::vector<std::vector<json>> rows;
        for (const auto &p : r.at("points")) {
            rows.push_back({r["model"], p["n"], r["t"], r["l"], p["capacity"], p["baseline"], r["fitted_slope"]});
        }
        return csv_table({"model", "n", "t", "l", "capacity_" + unit, "baseline_" + unit, "fitted_slope"}, rows);
    }
    throw ValidationError("report has unknown command '" + command + "'");
}

int run(const RunConfig &config, std::ostream &out, std::ostream &err) {
    try {
        validate(config);
        const json report = report_json(config);
        if (config.format == Format::Json) {
            out << report.dump(2) << '\n';
        } else {
            out << csv_from_json(report);
        }
        return 0;
    } catch (const std::exception &e) {
        err << "metrocap " << command_name(config.command) << ": error: " << e.what() << '\n';
        return 2;
    }
}

int main_entry(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Population-coding capacities and bounds for unitary metrology models", "metrocap"};
    app.require_subcommand(1);

    RunConfig c;
    std::string model;
    std::string l;
    std::string base = "e";
    std::string format;
    std::string n_range;
    std::optional<double> alpha;
    std::optional<double> beta;

    struct Sub {
        Command command;
        CLI::App *app;
    };
    std::vector<Sub> subs;
    auto make = [&](Command cmd, const char *name, const char *help) {
        CLI::App *sub = app.add_subcommand(name, help);
        add_common(sub, c, model, l, base, format);
        subs.push_back({cmd, sub});
        return sub;
    };

    auto *dec = make(Command::Decompose, "decompose", "isotypic decomposition of the n-fold representation");
    dec->add_option("--n", c.n, "number of copies")->required();

    auto *cap = make(Command::Capacity, "capacity", "optimal mutual information and input distribution");
    cap->add_option("--n", c.n, "number of copies")->required();

    auto *bnd = make(Command::Bounds, "bounds", "bounds on the number of distinguishable elements");
    bnd->add_option("--n", c.n, "number of copies")->required();
    bnd->add_option("--eps", c.eps, "average decoding error");
    bnd->add_option("--alpha", alpha, "Renyi order for the lower bound, in (1, 2]");
    bnd->add_option("--beta", beta, "Renyi order for the upper bound, in (0, 1)");

    auto *sim = make(Command::Simulate, "simulate", "dense-matrix twirl and square-root-measurement experiment");
    sim->add_option("--n", c.n, "number of copies")->required();
    sim->add_option("--seed", c.seed, "random seed");
    sim->add_option("--state", c.state, "bs4, noon or bn1");
    sim->add_option("--codebook", c.codebook, "lattice (mp) or haar (su)");
    sim->add_option("--codebook-size", c.codebook_size, "number of Haar-random elements (su)");

    auto *scl = make(Command::Scaling, "scaling", "capacity sweep over n with fitted log-slope");
    scl->add_option("--n-range", n_range, "start:stop:stride")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError &e) {
        std::string msg = e.what();
        for (auto &ch : msg) {
            if (ch == '\n') {
                ch = ' ';
            }
        }
        err << "metrocap: error: " << msg << '\n';
        return 2;
    }

    for (const auto &s : subs) {
        if (s.app->parsed()) {
            c.command = s.command;
        }
    }
    try {
        c.model = parse_model(model);
        if (!l.empty()) {
            c.l = ReferenceDim::parse(l);
        }
        c.base = parse_log_base(base);
        if (format.empty()) {
            const char *env = std::getenv("METROCAP_FORMAT");
            format = env && *env ? env : "json";
        }
        c.format = parse_format(format);
        c.alpha = alpha;
        c.beta = beta;
        if (!n_range.empty()) {
            c.n_range = NRange::parse(n_range);
        }
    } catch (const std::exception &e) {
        err << "metrocap " << command_name(c.command) << ": error: " << e.what() << '\n';
        return 2;
    }
    return run(c, out, err);
}

}  // namespace metrocap::cli
