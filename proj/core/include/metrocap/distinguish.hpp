#pragma once

// Bounds on the number M_eps of group elements that can be told apart with
// average error eps, and the estimation radius those counts imply.

#include "metrocap/rep_core.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace metrocap {

struct RenyiBounds {
    double alpha = 2.0;
    /// 0 records the beta -> 0 limit.
    double beta = 0.0;
    double epsilon = 0.5;
    double lower_log_M = 0.0;
    double upper_log_M = 0.0;
};

/// (1 / (1 - alpha)) log sum p^alpha. Tiny negative entries (>= -1e-12) are
/// clamped to zero; the spectrum must sum to one within 1e-12.
double renyi_entropy(std::span<const double> spectrum, double alpha);

/// alpha -> 0 limit: log of the number of strictly positive entries.
double renyi_zero_entropy(std::span<const double> spectrum, double tol = 1e-12);

/// -sum p log p.
double shannon_entropy(std::span<const double> spectrum);

/// lower = S_alpha - (log 2 - log eps) / (alpha - 1)
/// upper = S_beta + log(1 - eps) / (beta - 1)
/// with 1 < alpha <= 2, 0 < beta < 1, 0 < eps < 1.
RenyiBounds m_bounds_general(double s_alpha, double s_beta, double alpha, double beta, double eps);

/// alpha = 2 and beta -> 0 applied to the optimal twirled state, whose
/// spectrum is flat so every Renyi entropy equals the capacity R:
/// [R - (log 2 - log eps), R - log(1 - eps)].
RenyiBounds m_eps_capacity_bounds(const Decomposition &decomp, double eps);

/// Normalized Haar volume of a sup-distance ball of radius R on the
/// (t-1)-torus: (min(R, pi) / pi)^{t-1}.
double ball_volume_mp(double radius, int t);

/// Smallest R with volume(R) >= 1 / M, by bisection on [0, r_max] to 1e-10.
double radius_bound(double M, const std::function<double(double)> &volume, double r_max = kPi);

/// Equally spaced phase grid {2 pi k / N}^{t-1}, a finite subgroup of the torus.
class LatticeCodebook {
  public:
    LatticeCodebook(int t, int points_per_axis);

    int t() const { return t_; }
    int points_per_axis() const { return points_per_axis_; }
    /// N^{t-1}.
    std::uint64_t size() const;
    /// Maximal sup-distance from a torus point to the grid: pi / N.
    double covering_radius() const;

    /// Integer coordinates of element i (mixed radix, first axis most significant).
    std::vector<int> indices(std::uint64_t i) const;
    /// Phases in radians of element i.
    std::vector<double> phases(std::uint64_t i) const;
    std::vector<std::vector<double>> all_phases() const;
    /// Index of the group product (sum mod N) of elements i and j.
    std::uint64_t compose(std::uint64_t i, std::uint64_t j) const;

  private:
    int t_;
    int points_per_axis_;
};

/// N = n + 1 points per axis.
LatticeCodebook mp_lattice(int n, int t);

}  // namespace metrocap
