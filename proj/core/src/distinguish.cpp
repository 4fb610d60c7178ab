#include "metrocap/distinguish.hpp"

#include "metrocap/capacity.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace metrocap {

namespace {

constexpr double kNegTol = 1e-12;
constexpr double kSumTol = 1e-12;
constexpr double kBisectTol = 1e-10;

std::vector<double> checked_spectrum(std::span<const double> spectrum) {
    std::vector<double> out;
    out.reserve(spectrum.size());
    double sum = 0.0;
    for (double p : spectrum) {
        if (std::isnan(p) || p < -kNegTol) {
            throw std::invalid_argument("spectrum has a negative entry");
        }
        out.push_back(p < 0.0 ? 0.0 : p);
        sum += out.back();
    }
    if (std::abs(sum - 1.0) > kSumTol) {
        throw std::invalid_argument("spectrum does not sum to one");
    }
    return out;
}

}  // namespace

double renyi_entropy(std::span<const double> spectrum, double alpha) {
    if (!(alpha > 0.0) || alpha == 1.0) {
        throw std::invalid_argument("renyi_entropy: alpha must be positive and different from 1");
    }
    const auto p = checked_spectrum(spectrum);
    double trace = 0.0;
    for (double x : p) {
        if (x > 0.0) {
            trace += std::pow(x, alpha);
        }
    }
    return std::log(trace) / (1.0 - alpha);
}

double renyi_zero_entropy(std::span<const double> spectrum, double tol) {
    const auto p = checked_spectrum(spectrum);
    std::size_t rank = 0;
    for (double x : p) {
        rank += x > tol ? 1 : 0;
    }
    return std::log(static_cast<double>(rank));
}

double shannon_entropy(std::span<const double> spectrum) {
    const auto p = checked_spectrum(spectrum);
    double s = 0.0;
    for (double x : p) {
        if (x > 0.0) {
            s -= x * std::log(x);
        }
    }
    return s;
}

RenyiBounds m_bounds_general(double s_alpha, double s_beta, double alpha, double beta, double eps) {
    if (!(alpha > 1.0 && alpha <= 2.0)) {
        throw std::invalid_argument("m_bounds_general: alpha must lie in (1, 2]");
    }
    if (!(beta > 0.0 && beta < 1.0)) {
        throw std::invalid_argument("m_bounds_general: beta must lie in (0, 1)");
    }
    if (!(eps > 0.0 && eps < 1.0)) {
        throw std::invalid_argument("m_bounds_general: eps must lie in (0, 1)");
    }
    RenyiBounds b;
    b.alpha = alpha;
    b.beta = beta;
    b.epsilon = eps;
    b.lower_log_M = s_alpha - (kLn2 - std::log(eps)) / (alpha - 1.0);
    b.upper_log_M = s_beta + std::log1p(-eps) / (beta - 1.0);
    return b;
}

RenyiBounds m_eps_capacity_bounds(const Decomposition &decomp, double eps) {
    if (!(eps > 0.0 && eps < 1.0)) {
        throw std::invalid_argument("m_eps_capacity_bounds: eps must lie in (0, 1)");
    }
    const double r = capacity(decomp).value_nats;
    RenyiBounds b;
    b.alpha = 2.0;
    b.beta = 0.0;
    b.epsilon = eps;
    b.lower_log_M = r - (kLn2 - std::log(eps));
    b.upper_log_M = r - std::log1p(-eps);
    return b;
}

double ball_volume_mp(double radius, int t) {
    if (!(radius >= 0.0)) {
        throw std::invalid_argument("ball_volume_mp: radius must be non-negative");
    }
    if (t < 1) {
        throw std::invalid_argument("ball_volume_mp: t must be at least 1");
    }
    if (radius >= kPi) {
        return 1.0;
    }
    return std::pow(radius / kPi, t - 1);
}

double radius_bound(double M, const std::function<double(double)> &volume, double r_max) {
    if (!(M >= 1.0)) {
        throw std::invalid_argument("radius_bound: M must be at least 1");
    }
    const double target = 1.0 / M;
    if (volume(r_max) < target) {
        throw std::invalid_argument("radius_bound: volume function never reaches 1/M on [0, r_max]");
    }
    double lo = 0.0;
    double hi = r_max;
    if (volume(lo) >= target) {
        return lo;
    }
    while (hi - lo > kBisectTol) {
        const double mid = 0.5 * (lo + hi);
        if (volume(mid) >= target) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

LatticeCodebook::LatticeCodebook(int t, int points_per_axis) : t_(t), points_per_axis_(points_per_axis) {
    if (t < 2) {
        throw std::invalid_argument("LatticeCodebook: t must be at least 2");
    }
    if (points_per_axis < 1) {
        throw std::invalid_argument("LatticeCodebook: need at least one point per axis");
    }
}

std::uint64_t LatticeCodebook::size() const {
    std::uint64_t s = 1;
    for (int k = 0; k + 1 < t_; ++k) {
        if (s > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(points_per_axis_)) {
            throw std::overflow_error("LatticeCodebook::size overflows 64 bits");
        }
        s *= static_cast<std::uint64_t>(points_per_axis_);
    }
    return s;
}

double LatticeCodebook::covering_radius() const { return kPi / points_per_axis_; }

std::vector<int> LatticeCodebook::indices(std::uint64_t i) const {
    std::vector<int> idx(static_cast<std::size_t>(t_ - 1), 0);
    const auto N = static_cast<std::uint64_t>(points_per_axis_);
    for (int axis = t_ - 2; axis >= 0; --axis) {
        idx[axis] = static_cast<int>(i % N);
        i /= N;
    }
    return idx;
}

std::vector<double> LatticeCodebook::phases(std::uint64_t i) const {
    std::vector<double> out;
    for (int k : indices(i)) {
        out.push_back(2.0 * kPi * k / points_per_axis_);
    }
    return out;
}

std::vector<std::vector<double>> LatticeCodebook::all_phases() const {
    std::vector<std::vector<double>> out;
    const std::uint64_t m = size();
    out.reserve(m);
    for (std::uint64_t i = 0; i < m; ++i) {
        out.push_back(phases(i));
    }
    return out;
}

std::uint64_t LatticeCodebook::compose(std::uint64_t i, std::uint64_t j) const {
    const auto a = indices(i);
    const auto b = indices(j);
    std::uint64_t out = 0;
    for (std::size_t axis = 0; axis < a.size(); ++axis) {
        out = out * static_cast<std::uint64_t>(points_per_axis_) +
              static_cast<std::uint64_t>((a[axis] + b[axis]) % points_per_axis_);
    }
    return out;
}

LatticeCodebook mp_lattice(int n, int t) {
    if (n < 1) {
        throw std::invalid_argument("mp_lattice: n must be positive");
    }
    return LatticeCodebook(t, n + 1);
}

}  // namespace metrocap
