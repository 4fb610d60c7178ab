#pragma once

// Mutual-information capacities of twirled population states.
//
// For a decomposition into blocks U_lambda (x) C^{m_lambda} with
// m_lambda = min(l * n_lambda, d_lambda), the Haar-twirled image of the best
// pure input is flat on a support of size W = sum_lambda d_lambda * m_lambda,
// so the capacity is log W. Values are natural-log unless stated otherwise.

#include "metrocap/numeric.hpp"
#include "metrocap/rep_core.hpp"

#include <string>
#include <utility>
#include <vector>

namespace metrocap {

enum class LogBase { Natural, Two };

/// Converts a value in nats to the requested base.
double in_base(double nats, LogBase base);
std::string to_string(LogBase base);
LogBase parse_log_base(const std::string &text);

struct BlockWeight {
    std::vector<int> label;
    Rational p;
};

struct CapacityReport {
    double value_nats = 0.0;
    /// Exact support size W.
    BigInt support = 1;
    std::vector<BlockWeight> optimal_p;
    Model model = Model::SpecialUnitary;
    int n = 0;
    int t = 0;
    ReferenceDim l = ReferenceDim::unbounded();

    double value(LogBase base) const { return in_base(value_nats, base); }
};

struct InputBlock {
    std::vector<int> label;
    /// Squared amplitude of the block.
    Rational p;
    BigInt dim;
    BigInt eff_mult;
    std::string descriptor;
};

/// Optimal input: sum over blocks of sqrt(p_lambda) |phi_lambda>, where
/// |phi_lambda> is maximally entangled on U_lambda (x) C^{eff_mult}.
struct InputStateSpec {
    std::vector<InputBlock> blocks;
};

CapacityReport capacity(const Decomposition &decomp);

/// S(p) + sum_lambda p_lambda log(d_lambda * eff_mult_lambda).
///
/// The rational overload collects terms with equal d*m/p exactly before
/// taking logarithms, so the optimal distribution reproduces log W with no
/// accumulated rounding. p must sum to exactly one.
double block_state_mi(const std::vector<Rational> &p, const Decomposition &decomp);
/// Floating-point overload; p must sum to one within 1e-12.
double block_state_mi(const std::vector<double> &p, const Decomposition &decomp);

InputStateSpec optimal_input(const Decomposition &decomp);

/// log binomial(n + t - 1, t - 1).
double mp_capacity(int n, int t);

/// Exact sum of d_lambda^2 over partitions of n with at most t rows.
BigInt su_dimension_square_sum(int n, int t);
/// log su_dimension_square_sum(n, t).
double su_capacity(int n, int t);

/// Closed form of the t = 2 sum, evaluated by parity of n.
BigInt su2_closed_form(int n);

/// |log sum d^2 - (3 log n - log 6)| for t = 2.
double su2_asymptote_residual(int n);

/// Partitions of n (at most t rows) whose consecutive row gaps are all at
/// least n / (a t). Requires 2 <= a <= 3 and n / (a t) a positive integer.
std::vector<Partition> gapped_partitions(int n, int t, const Rational &a);

struct LowerBound {
    double value_nats = 0.0;
    std::size_t gapped_count = 0;
    /// n / (a t^2), the per-pair factor lower bound.
    Rational per_pair_scale;
};

/// log(|gapped set| * (n / (a t^2))^{t(t-1)}).
LowerBound su_lower_bound_detail(int n, int t, const Rational &a);
double su_lower_bound(int n, int t, const Rational &a);

/// 2 log binomial(n + t - 1, t - 1): the twirled entropy of the maximally
/// entangled state on the symmetric subspace.
double symmetric_subspace_mi(int n, int t);

/// Upper bound on log N for N states distinguishable with error eps.
double fano_bound(double mi, double eps);

/// Ordinary least-squares slope of value against log n.
double scaling_fit(const std::vector<std::pair<double, double>> &points);

struct SweepRow {
    int n = 0;
    double capacity_nats = 0.0;
    /// Standard-scaling reference (parameters / 2) * log n.
    double baseline_nats = 0.0;
};

/// Number of real parameters of the model: t - 1 (MP) or t^2 - 1 (SU).
int parameter_count(Model model, int t);

std::vector<SweepRow> capacity_sweep(Model model, int t, ReferenceDim l, int n_start, int n_stop, int stride);

}  // namespace metrocap
