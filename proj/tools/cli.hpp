#pragma once

#include "metrocap/capacity.hpp"
#include "metrocap/rep_core.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace metrocap::cli {

enum class Command { Decompose, Capacity, Bounds, Simulate, Scaling };
enum class Format { Json, Csv };

struct NRange {
    int start = 1;
    int stop = 1;
    int stride = 1;

    /// "start:stop:stride" (stride optional).
    static NRange parse(const std::string &text);
};

struct RunConfig {
    Command command = Command::Capacity;
    Model model = Model::SpecialUnitary;
    int n = 1;
    int t = 2;
    /// Unset means the model default: unbounded for SU, 1 for MP.
    std::optional<ReferenceDim> l;
    double eps = 0.5;
    std::optional<double> alpha;
    std::optional<double> beta;
    LogBase base = LogBase::Natural;
    Format format = Format::Json;
    std::uint64_t seed = 20240601;
    std::optional<NRange> n_range;
    std::string state;
    std::string codebook;
    std::size_t codebook_size = 0;
};

/// Caps enforced on every command.
inline constexpr int kMaxCopies = 10000;
inline constexpr int kMaxLocalDim = 16;
/// Largest number of Young diagrams an SU command may enumerate.
inline constexpr long kMaxPartitionCount = 2000000;

/// Thrown for invalid configurations; maps to exit status 2.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void validate(const RunConfig &config);

/// The report for a configuration, before formatting.
nlohmann::json report_json(const RunConfig &config);

/// CSV rendering of a report produced by report_json; depends only on the
/// report contents, so a re-parsed report renders identically.
std::string csv_from_json(const nlohmann::json &report);

/// Validates, computes and writes the report. Returns the exit status.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

/// Full command-line entry point (argument parsing included).
int main_entry(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace metrocap::cli
