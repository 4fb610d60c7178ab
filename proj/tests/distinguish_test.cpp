#include "metrocap/capacity.hpp"
#include "metrocap/distinguish.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

using namespace metrocap;

namespace {

std::vector<double> random_spectrum(std::mt19937_64 &rng, std::size_t size) {
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> p(size);
    double total = 0.0;
    for (auto &x : p) {
        x = expo(rng);
        total += x;
    }
    for (auto &x : p) {
        x /= total;
    }
    return p;
}

}  // namespace

TEST(RenyiEntropy, examples) {
    const std::vector<double> flat(7, 1.0 / 7);
    const std::vector<double> pure{1.0, 0.0, 0.0};
    for (double a : {0.3, 0.5, 2.0, 3.0}) {
        EXPECT_NEAR(renyi_entropy(flat, a), std::log(7.0), 1e-14);
        EXPECT_NEAR(renyi_entropy(pure, a), 0.0, 1e-15);
    }
    const std::vector<double> skew{0.75, 0.25};
    EXPECT_NEAR(renyi_entropy(skew, 2.0), std::log(8.0 / 5.0), 1e-15);
    EXPECT_THROW(renyi_entropy(skew, 1.0), std::invalid_argument);
    EXPECT_THROW(renyi_entropy(std::vector<double>{0.5, 0.6}, 2.0), std::invalid_argument);
    EXPECT_THROW(renyi_entropy(std::vector<double>{1.1, -0.1}, 2.0), std::invalid_argument);
    EXPECT_NEAR(renyi_entropy(std::vector<double>{1.0 + 1e-13, -1e-13}, 2.0), 0.0, 1e-12);
}

TEST(RenyiEntropy, approaches_shannon_at_alpha_one) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const auto p = random_spectrum(rng, 2 + trial % 9);
        const double s1 = shannon_entropy(p);
        EXPECT_NEAR(renyi_entropy(p, 1.0 + 1e-4), s1, 1e-3);
        EXPECT_NEAR(renyi_entropy(p, 1.0 - 1e-4), s1, 1e-3);
    }
}

TEST(RenyiEntropy, monotone_in_order) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const auto p = random_spectrum(rng, 2 + trial % 9);
        const double s1 = shannon_entropy(p);
        for (double a : {1.1, 1.5, 2.0}) {
            EXPECT_LE(renyi_entropy(p, a), s1 + 1e-12);
        }
        for (double b : {0.1, 0.5, 0.9}) {
            EXPECT_GE(renyi_entropy(p, b), s1 - 1e-12);
            EXPECT_LE(renyi_entropy(p, b), renyi_zero_entropy(p) + 1e-12);
        }
        EXPECT_LE(renyi_entropy(p, 2.0), renyi_entropy(p, 1.5) + 1e-12);
    }
}

TEST(MBoundsGeneral, flat_spectrum) {
    const double logd = std::log(12.0);
    const auto b = m_bounds_general(logd, logd, 2.0, 0.01, 0.5);
    EXPECT_NEAR(b.lower_log_M, logd - 2 * std::log(2.0), 1e-14);
    EXPECT_NEAR(b.upper_log_M, logd + std::log(2.0) / 0.99, 1e-14);
    EXPECT_GE(b.upper_log_M, logd);
    EXPECT_THROW(m_bounds_general(1, 1, 1.0, 0.5, 0.5), std::invalid_argument);
    EXPECT_THROW(m_bounds_general(1, 1, 2.5, 0.5, 0.5), std::invalid_argument);
    EXPECT_THROW(m_bounds_general(1, 1, 2.0, 1.0, 0.5), std::invalid_argument);
    EXPECT_THROW(m_bounds_general(1, 1, 2.0, 0.5, 0.0), std::invalid_argument);
    EXPECT_THROW(m_bounds_general(1, 1, 2.0, 0.5, 1.0), std::invalid_argument);
}

TEST(MBoundsGeneral, epsilon_limits) {
    const auto near_one = m_bounds_general(3.0, 3.0, 2.0, 0.5, 1.0 - 1e-9);
    EXPECT_NEAR(near_one.lower_log_M, 3.0 - std::log(2.0), 1e-8);
    EXPECT_GT(near_one.upper_log_M, 30.0);
}

TEST(MEpsCapacityBounds, examples) {
    const auto mp = m_eps_capacity_bounds(decompose(Model::MultiPhase, 3, 2, ReferenceDim::of(1)), 0.5);
    EXPECT_NEAR(mp.lower_log_M, 0.0, 1e-14);
    EXPECT_NEAR(mp.upper_log_M, std::log(8.0), 1e-14);
    EXPECT_EQ(mp.alpha, 2.0);
    EXPECT_EQ(mp.beta, 0.0);
    const auto su = m_eps_capacity_bounds(decompose(Model::SpecialUnitary, 2, 2, ReferenceDim::unbounded()), 0.5);
    EXPECT_NEAR(su.lower_log_M, std::log(2.5), 1e-14);
    EXPECT_NEAR(su.upper_log_M, std::log(20.0), 1e-14);
}

TEST(MEpsCapacityBounds, endpoint_gap_is_model_independent) {
    for (double eps : {0.05, 0.3, 0.5, 0.9}) {
        const double expected = std::log(2.0) - std::log(eps) - std::log1p(-eps);
        for (const auto &d : {decompose(Model::MultiPhase, 6, 3, ReferenceDim::of(1)),
                              decompose(Model::SpecialUnitary, 5, 3, ReferenceDim::unbounded()),
                              decompose(Model::SpecialUnitary, 4, 2, ReferenceDim::of(1))}) {
            const auto b = m_eps_capacity_bounds(d, eps);
            EXPECT_NEAR(b.upper_log_M - b.lower_log_M, expected, 1e-12);
            EXPECT_LE(b.lower_log_M, b.upper_log_M);
        }
    }
}

TEST(MEpsCapacityBounds, slope_follows_capacity) {
    std::vector<std::pair<double, double>> lower;
    for (int n = 100; n <= 400; n += 20) {
        lower.emplace_back(n, m_eps_capacity_bounds(decompose(Model::SpecialUnitary, n, 2, ReferenceDim::unbounded()), 0.2).lower_log_M);
    }
    EXPECT_NEAR(scaling_fit(lower), 3.0, 0.15);
}

TEST(BallVolume, examples) {
    EXPECT_DOUBLE_EQ(ball_volume_mp(kPi, 2), 1.0);
    EXPECT_DOUBLE_EQ(ball_volume_mp(kPi, 5), 1.0);
    EXPECT_DOUBLE_EQ(ball_volume_mp(10.0, 3), 1.0);
    EXPECT_DOUBLE_EQ(ball_volume_mp(kPi / 2, 2), 0.5);
    EXPECT_DOUBLE_EQ(ball_volume_mp(kPi / 2, 3), 0.25);
    EXPECT_THROW(ball_volume_mp(-0.1, 2), std::invalid_argument);
}

TEST(RadiusBound, examples) {
    const auto v2 = [](double r) { return ball_volume_mp(r, 2); };
    const auto v3 = [](double r) { return ball_volume_mp(r, 3); };
    EXPECT_NEAR(radius_bound(1.0, v2), kPi, 1e-9);
    EXPECT_NEAR(radius_bound(5.0, v2), kPi / 5, 1e-9);
    EXPECT_NEAR(radius_bound(25.0, v3), kPi / 5, 1e-9);
    EXPECT_THROW(radius_bound(0.5, v2), std::invalid_argument);
}

TEST(RadiusBound, inverts_ball_volume) {
    for (int t = 2; t <= 5; ++t) {
        const auto v = [t](double r) { return ball_volume_mp(r, t); };
        for (double m : {1.0, 2.0, 3.7, 10.0, 1e3, 1e6}) {
            EXPECT_NEAR(radius_bound(m, v), kPi / std::pow(m, 1.0 / (t - 1)), 1e-9) << "t=" << t << " M=" << m;
        }
    }
}

TEST(LatticeCodebook, examples) {
    const auto l3 = mp_lattice(3, 2);
    ASSERT_EQ(l3.size(), 4u);
    const auto ph = l3.all_phases();
    for (std::size_t k = 0; k < 4; ++k) {
        EXPECT_NEAR(ph[k][0], kPi * static_cast<double>(k) / 2, 1e-15);
    }
    EXPECT_DOUBLE_EQ(l3.covering_radius(), kPi / 4);
    const auto l1 = mp_lattice(1, 2);
    EXPECT_EQ(l1.size(), 2u);
    EXPECT_DOUBLE_EQ(l1.phases(1)[0], kPi);
    EXPECT_DOUBLE_EQ(l1.covering_radius(), kPi / 2);
    const auto l23 = mp_lattice(2, 3);
    EXPECT_EQ(l23.size(), 9u);
    EXPECT_DOUBLE_EQ(l23.covering_radius(), kPi / 3);
    EXPECT_EQ(l23.indices(5), (std::vector<int>{1, 2}));
    EXPECT_THROW(mp_lattice(0, 2), std::invalid_argument);
}

TEST(LatticeCodebook, closed_under_addition) {
    const LatticeCodebook lat(3, 5);
    std::set<std::vector<int>> elements;
    for (std::uint64_t i = 0; i < lat.size(); ++i) {
        elements.insert(lat.indices(i));
    }
    ASSERT_EQ(elements.size(), lat.size());
    for (std::uint64_t i = 0; i < lat.size(); ++i) {
        for (std::uint64_t j = 0; j < lat.size(); ++j) {
            const auto a = lat.indices(i);
            const auto b = lat.indices(j);
            std::vector<int> sum(a.size());
            for (std::size_t k = 0; k < a.size(); ++k) {
                sum[k] = (a[k] + b[k]) % 5;
            }
            ASSERT_TRUE(elements.count(sum));
            ASSERT_EQ(lat.indices(lat.compose(i, j)), sum);
        }
    }
}

TEST(LatticeCodebook, packing_inequality) {
    for (int t = 2; t <= 4; ++t) {
        for (int n = 1; n <= 40; ++n) {
            const auto lat = mp_lattice(n, t);
            EXPECT_LE(static_cast<double>(lat.size()) * ball_volume_mp(lat.covering_radius(), t), 1.0 + 1e-12);
        }
    }
}

TEST(LatticeCodebook, covering_radius_by_sampling) {
    // Sup-distance from random torus points to the nearest grid point never
    // exceeds pi / N, and gets close to it.
    const auto lat = mp_lattice(4, 3);
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0.0, 2 * kPi);
    double worst = 0.0;
    for (int s = 0; s < 2000; ++s) {
        const std::vector<double> x{u(rng), u(rng)};
        double best = 1e9;
        for (const auto &g : lat.all_phases()) {
            double dist = 0.0;
            for (std::size_t k = 0; k < 2; ++k) {
                double d = std::fmod(std::abs(x[k] - g[k]), 2 * kPi);
                dist = std::max(dist, std::min(d, 2 * kPi - d));
            }
            best = std::min(best, dist);
        }
        worst = std::max(worst, best);
    }
    EXPECT_LE(worst, lat.covering_radius() + 1e-12);
    EXPECT_GT(worst, 0.9 * lat.covering_radius());
}
