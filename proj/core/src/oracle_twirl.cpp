#include "metrocap/oracle.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace metrocap::oracle {

namespace {

// Per-site weight counts (n_1, ..., n_{t-1}) of every system basis string.
std::vector<std::vector<int>> weight_table(int n, int t) {
    const Dims dims{n, t, 1};
    const std::size_t size = dims.system_size();
    std::vector<std::vector<int>> table(size, std::vector<int>(static_cast<std::size_t>(t - 1), 0));
    for (std::size_t x = 0; x < size; ++x) {
        std::size_t rest = x;
        for (int site = 0; site < n; ++site) {
            const auto digit = static_cast<int>(rest % static_cast<std::size_t>(t));
            rest /= static_cast<std::size_t>(t);
            if (digit > 0) {
                ++table[x][static_cast<std::size_t>(digit - 1)];
            }
        }
    }
    return table;
}

void require_qubits(const Dims &dims, int n, const char *where) {
    if (dims.t != 2 || dims.n != n) {
        throw std::invalid_argument(std::string(where) + ": dimension mismatch");
    }
    if (n < 1 || n > kMaxSu2Copies) {
        throw std::invalid_argument(std::string(where) + ": n must lie in [1, " + std::to_string(kMaxSu2Copies) + "]");
    }
}

// Collective spin operators on n qubits in the computational basis; |0> is
// spin up. Only the real lowering operator and the Casimir are needed.
Eigen::MatrixXd lowering_operator(int n) {
    const std::size_t size = std::size_t{1} << n;
    Eigen::MatrixXd lower = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(size), static_cast<Eigen::Index>(size));
    for (std::size_t x = 0; x < size; ++x) {
        for (int site = 0; site < n; ++site) {
            const std::size_t bit = std::size_t{1} << (n - 1 - site);
            if ((x & bit) == 0) {
                lower(static_cast<Eigen::Index>(x | bit), static_cast<Eigen::Index>(x)) += 1.0;
            }
        }
    }
    return lower;
}

}  // namespace

DensityOperator mp_twirl(const DensityOperator &rho, int n, int t, int grid) {
    const Dims &dims = rho.dims();
    if (dims.n != n || dims.t != t || t < 2) {
        throw std::invalid_argument("mp_twirl: dimension mismatch");
    }
    if (dims.total() > kMaxMpDimension) {
        throw std::invalid_argument("mp_twirl: state dimension exceeds " + std::to_string(kMaxMpDimension));
    }
    const int points = grid == 0 ? n + 1 : grid;
    if (points < 1) {
        throw std::invalid_argument("mp_twirl: grid must be positive");
    }
    const auto weights = weight_table(n, t);
    const auto ref = static_cast<std::size_t>(dims.ref_dim);
    const auto d = static_cast<Eigen::Index>(dims.total());
    const int axes = t - 1;

    std::size_t grid_size = 1;
    for (int a = 0; a < axes; ++a) {
        grid_size *= static_cast<std::size_t>(points);
    }

    const Eigen::MatrixXcd &in = rho.matrix();
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(d, d);
    Eigen::VectorXcd phase(d);
    std::vector<int> k(static_cast<std::size_t>(axes), 0);
    for (std::size_t g = 0; g < grid_size; ++g) {
        std::size_t rest = g;
        for (int a = axes - 1; a >= 0; --a) {
            k[static_cast<std::size_t>(a)] = static_cast<int>(rest % static_cast<std::size_t>(points));
            rest /= static_cast<std::size_t>(points);
        }
        for (Eigen::Index i = 0; i < d; ++i) {
            const auto &w = weights[static_cast<std::size_t>(i) / ref];
            double angle = 0.0;
            for (int a = 0; a < axes; ++a) {
                angle += 2.0 * kPi * k[static_cast<std::size_t>(a)] / points * w[static_cast<std::size_t>(a)];
            }
            phase(i) = std::polar(1.0, angle);
        }
        // U rho U^dagger with U diagonal.
        acc += (phase * phase.adjoint()).cwiseProduct(in);
    }
    acc /= static_cast<double>(grid_size);
    return DensityOperator(std::move(acc), dims);
}

Su2SchurBasis::Su2SchurBasis(int n) : n_(n) {
    if (n < 1 || n > kMaxSu2Copies) {
        throw std::invalid_argument("Su2SchurBasis: n must lie in [1, " + std::to_string(kMaxSu2Copies) + "]");
    }
    const std::size_t size = std::size_t{1} << n;
    const Eigen::MatrixXd lower = lowering_operator(n);
    const Eigen::MatrixXd raise = lower.transpose();
    Eigen::VectorXd jz(static_cast<Eigen::Index>(size));
    for (std::size_t x = 0; x < size; ++x) {
        jz(static_cast<Eigen::Index>(x)) = 0.5 * (n - 2 * std::popcount(x));
    }
    // J^2 = J_- J_+ + J_z^2 + J_z.
    Eigen::MatrixXd casimir = lower * raise;
    casimir.diagonal() += (jz.array().square() + jz.array()).matrix();

    w_ = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(size), static_cast<Eigen::Index>(size));
    int offset = 0;
    for (int ones = 0; 2 * ones <= n; ++ones) {
        const int two_j = n - 2 * ones;
        const double j = 0.5 * two_j;
        // Highest-weight vectors of spin j: Casimir eigenvectors with
        // eigenvalue j(j+1) inside the sector with m = j.
        std::vector<std::size_t> sector;
        for (std::size_t x = 0; x < size; ++x) {
            if (std::popcount(x) == ones) {
                sector.push_back(x);
            }
        }
        const auto s = static_cast<Eigen::Index>(sector.size());
        Eigen::MatrixXd restricted(s, s);
        for (Eigen::Index a = 0; a < s; ++a) {
            for (Eigen::Index b = 0; b < s; ++b) {
                restricted(a, b) = casimir(static_cast<Eigen::Index>(sector[a]), static_cast<Eigen::Index>(sector[b]));
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(restricted);
        std::vector<Eigen::VectorXd> highest;
        for (Eigen::Index c = 0; c < s; ++c) {
            if (std::abs(solver.eigenvalues()(c) - j * (j + 1.0)) < 1e-8) {
                Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(size));
                for (Eigen::Index a = 0; a < s; ++a) {
                    v(static_cast<Eigen::Index>(sector[a])) = solver.eigenvectors()(a, c);
                }
                highest.push_back(std::move(v));
            }
        }
        Block block{two_j, two_j + 1, static_cast<int>(highest.size()), offset};
        // Walk each highest-weight vector down its lowering orbit so all
        // multiplicity copies share the same irrep basis.
        for (int a = 0; a < block.mult; ++a) {
            Eigen::VectorXd v = highest[static_cast<std::size_t>(a)];
            for (int mi = 0; mi < block.dim; ++mi) {
                w_.col(block.column(mi, a)) = v.cast<Complex>();
                const double m = j - mi;
                const double coeff = std::sqrt(j * (j + 1.0) - m * (m - 1.0));
                if (mi + 1 < block.dim) {
                    v = lower * v / coeff;
                }
            }
        }
        offset += block.dim * block.mult;
        blocks_.push_back(block);
    }
    if (offset != static_cast<int>(size)) {
        throw std::logic_error("Su2SchurBasis: blocks do not span the space");
    }
}

DensityOperator su2_twirl(const DensityOperator &rho, int n) { return su2_twirl(rho, Su2SchurBasis(n)); }

DensityOperator su2_twirl(const DensityOperator &rho, const Su2SchurBasis &basis) {
    const Dims &dims = rho.dims();
    require_qubits(dims, basis.n(), "su2_twirl");
    const int ref = dims.ref_dim;
    // W (x) I_ref.
    const Eigen::MatrixXcd &sys = basis.unitary();
    const auto d = static_cast<Eigen::Index>(dims.total());
    Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(d, d);
    for (Eigen::Index i = 0; i < sys.rows(); ++i) {
        for (Eigen::Index j = 0; j < sys.cols(); ++j) {
            if (sys(i, j) != Complex(0.0, 0.0)) {
                for (int r = 0; r < ref; ++r) {
                    full(i * ref + r, j * ref + r) = sys(i, j);
                }
            }
        }
    }
    const Eigen::MatrixXcd schur = full.adjoint() * rho.matrix() * full;
    Eigen::MatrixXcd twirled = Eigen::MatrixXcd::Zero(d, d);
    for (const auto &block : basis.blocks()) {
        const int inner = block.mult * ref;
        auto flat = [&](int mi, int k) -> Eigen::Index {
            // k enumerates (multiplicity copy, reference index).
            return static_cast<Eigen::Index>(block.column(mi, k / ref)) * ref + k % ref;
        };
        // Partial trace over the irrep factor.
        Eigen::MatrixXcd reduced = Eigen::MatrixXcd::Zero(inner, inner);
        for (int mi = 0; mi < block.dim; ++mi) {
            for (int a = 0; a < inner; ++a) {
                for (int b = 0; b < inner; ++b) {
                    reduced(a, b) += schur(flat(mi, a), flat(mi, b));
                }
            }
        }
        reduced /= static_cast<double>(block.dim);
        for (int mi = 0; mi < block.dim; ++mi) {
            for (int a = 0; a < inner; ++a) {
                for (int b = 0; b < inner; ++b) {
                    twirled(flat(mi, a), flat(mi, b)) = reduced(a, b);
                }
            }
        }
    }
    Eigen::MatrixXcd out = full * twirled * full.adjoint();
    out = 0.5 * (out + out.adjoint()).eval();
    return DensityOperator(std::move(out), dims);
}

DensityOperator su2_twirl_monte_carlo(const DensityOperator &rho, int n, std::size_t samples, std::uint64_t seed) {
    const Dims &dims = rho.dims();
    require_qubits(dims, n, "su2_twirl_monte_carlo");
    if (samples == 0) {
        throw std::invalid_argument("su2_twirl_monte_carlo: need at least one sample");
    }
    std::mt19937_64 rng(seed);
    const auto d = static_cast<Eigen::Index>(dims.total());
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(d, d);
    for (std::size_t s = 0; s < samples; ++s) {
        const Eigen::MatrixXcd u = tensor_power_matrix(haar_su2(rng), n, dims.ref_dim);
        acc += u * rho.matrix() * u.adjoint();
    }
    acc /= static_cast<double>(samples);
    acc = 0.5 * (acc + acc.adjoint()).eval();
    return DensityOperator(std::move(acc), dims);
}

PureState bn1_state_su2(int n) {
    const Su2SchurBasis basis(n);
    const int ref = n + 1;
    const Dims dims{n, 2, ref};
    double square_sum = 0.0;
    for (const auto &block : basis.blocks()) {
        square_sum += static_cast<double>(block.dim) * block.dim;
    }
    // Amplitude sqrt(p_lambda / d_lambda) = sqrt(d_lambda / sum d^2) on each
    // |j, m, copy 0> (x) |ref = m>.
    Eigen::VectorXcd schur = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dims.total()));
    for (const auto &block : basis.blocks()) {
        const double amp = std::sqrt(block.dim / square_sum);
        for (int mi = 0; mi < block.dim; ++mi) {
            schur(static_cast<Eigen::Index>(block.column(mi, 0)) * ref + mi) = amp;
        }
    }
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(schur.size());
    const Eigen::MatrixXcd &w = basis.unitary();
    for (Eigen::Index col = 0; col < w.cols(); ++col) {
        for (int r = 0; r < ref; ++r) {
            const Complex c = schur(col * ref + r);
            if (c != Complex(0.0, 0.0)) {
                for (Eigen::Index row = 0; row < w.rows(); ++row) {
                    v(row * ref + r) += w(row, col) * c;
                }
            }
        }
    }
    return PureState(std::move(v), dims);
}

double empirical_mi(const PureState &psi, Model model, int n, int t) {
    const DensityOperator rho = DensityOperator::from_pure(psi);
    switch (model) {
        case Model::MultiPhase:
            return von_neumann_entropy(mp_twirl(rho, n, t));
        case Model::SpecialUnitary:
            if (t != 2) {
                throw std::invalid_argument("empirical_mi: the SU oracle supports t = 2 only");
            }
            return von_neumann_entropy(su2_twirl(rho, n));
    }
    throw std::invalid_argument("empirical_mi: unsupported model tag");
}

}  // namespace metrocap::oracle
