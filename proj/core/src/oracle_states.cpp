#include "metrocap/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace metrocap::oracle {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kDensityTol = 1e-10;
constexpr double kTraceTol = 1e-8;
constexpr double kEigenFloor = 1e-12;

std::size_t ipow(std::size_t base, int exp) {
    std::size_t out = 1;
    for (int i = 0; i < exp; ++i) {
        out *= base;
    }
    return out;
}

}  // namespace

std::size_t Dims::system_size() const {
    if (n < 0 || t < 1 || ref_dim < 1) {
        throw std::invalid_argument("Dims: need n >= 0, t >= 1, ref_dim >= 1");
    }
    return ipow(static_cast<std::size_t>(t), n);
}

PureState::PureState(Eigen::VectorXcd amplitudes, Dims dims) : amps_(std::move(amplitudes)), dims_(dims) {
    if (static_cast<std::size_t>(amps_.size()) != dims_.total()) {
        throw std::invalid_argument("PureState: amplitude count does not match dimensions");
    }
    if (std::abs(amps_.norm() - 1.0) > kNormTol) {
        throw std::invalid_argument("PureState: vector is not normalized");
    }
}

DensityOperator::DensityOperator(Eigen::MatrixXcd matrix, Dims dims) : m_(std::move(matrix)), dims_(dims) {
    const auto d = static_cast<Eigen::Index>(dims_.total());
    if (m_.rows() != d || m_.cols() != d) {
        throw std::invalid_argument("DensityOperator: matrix does not match dimensions");
    }
    if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > kDensityTol) {
        throw std::invalid_argument("DensityOperator: matrix is not Hermitian");
    }
    if (std::abs(m_.trace() - Complex(1.0, 0.0)) > kDensityTol) {
        throw std::invalid_argument("DensityOperator: trace is not one");
    }
    // PSD within tolerance iff the shifted matrix admits a Cholesky factor.
    Eigen::MatrixXcd shifted = 0.5 * (m_ + m_.adjoint());
    shifted.diagonal().array() += kDensityTol;
    if (Eigen::LLT<Eigen::MatrixXcd>(shifted).info() != Eigen::Success) {
        throw std::invalid_argument("DensityOperator: matrix has a negative eigenvalue");
    }
}

DensityOperator DensityOperator::from_pure(const PureState &psi) {
    const auto &v = psi.amplitudes();
    return DensityOperator(v * v.adjoint(), psi.dims());
}

DensityOperator DensityOperator::maximally_mixed(Dims dims) {
    const auto d = static_cast<Eigen::Index>(dims.total());
    return DensityOperator(Eigen::MatrixXcd::Identity(d, d) / static_cast<double>(d), dims);
}

Codebook Codebook::from_phases(std::vector<std::vector<double>> phases) {
    for (const auto &theta : phases) {
        for (double x : theta) {
            if (!(x >= 0.0 && x < 2.0 * kPi)) {
                throw std::invalid_argument("Codebook: phases must lie in [0, 2 pi)");
            }
        }
    }
    Codebook c;
    c.kind_ = Kind::Phases;
    c.phases_ = std::move(phases);
    return c;
}

Codebook Codebook::from_lattice(const LatticeCodebook &lattice) { return from_phases(lattice.all_phases()); }

Codebook Codebook::from_su2(std::vector<Eigen::Matrix2cd> elements) {
    for (const auto &u : elements) {
        if (!(u.adjoint() * u).isIdentity(kDensityTol) || std::abs(u.determinant() - Complex(1.0, 0.0)) > kDensityTol) {
            throw std::invalid_argument("Codebook: element is not in SU(2)");
        }
    }
    Codebook c;
    c.kind_ = Kind::SpecialUnitary2;
    c.su2_ = std::move(elements);
    return c;
}

Codebook Codebook::haar_su2(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Eigen::Matrix2cd> elements;
    elements.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        elements.push_back(oracle::haar_su2(rng));
    }
    return from_su2(std::move(elements));
}

std::size_t Codebook::size() const { return kind_ == Kind::Phases ? phases_.size() : su2_.size(); }

Eigen::MatrixXcd mp_unitary(std::span<const double> theta, int t) {
    if (t < 1 || theta.size() != static_cast<std::size_t>(t - 1)) {
        throw std::invalid_argument("mp_unitary: need t - 1 phases");
    }
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(t, t);
    u(0, 0) = 1.0;
    for (int j = 1; j < t; ++j) {
        u(j, j) = std::polar(1.0, theta[j - 1]);
    }
    return u;
}

Eigen::Matrix2cd haar_su2(std::mt19937_64 &rng) {
    // A uniformly random unit quaternion is Haar-distributed on SU(2).
    std::normal_distribution<double> gauss(0.0, 1.0);
    double q[4];
    double norm = 0.0;
    do {
        norm = 0.0;
        for (double &x : q) {
            x = gauss(rng);
            norm += x * x;
        }
    } while (norm < 1e-24);
    norm = std::sqrt(norm);
    for (double &x : q) {
        x /= norm;
    }
    Eigen::Matrix2cd u;
    u << Complex(q[0], q[1]), Complex(q[2], q[3]), Complex(-q[2], q[3]), Complex(q[0], -q[1]);
    return u;
}

PureState tensor_power_apply(const Eigen::MatrixXcd &U, int n, const PureState &psi) {
    const Dims &dims = psi.dims();
    if (U.rows() != dims.t || U.cols() != dims.t || n != dims.n) {
        throw std::invalid_argument("tensor_power_apply: dimension mismatch");
    }
    const auto t = static_cast<std::size_t>(dims.t);
    Eigen::VectorXcd v = psi.amplitudes();
    std::vector<Complex> scratch(t);
    const std::size_t total = dims.total();
    for (int site = 0; site < n; ++site) {
        const std::size_t stride = ipow(t, n - 1 - site) * static_cast<std::size_t>(dims.ref_dim);
        const std::size_t block = stride * t;
        for (std::size_t base = 0; base < total; base += block) {
            for (std::size_t off = 0; off < stride; ++off) {
                for (std::size_t a = 0; a < t; ++a) {
                    Complex acc = 0.0;
                    for (std::size_t b = 0; b < t; ++b) {
                        acc += U(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) *
                               v(static_cast<Eigen::Index>(base + off + b * stride));
                    }
                    scratch[a] = acc;
                }
                for (std::size_t a = 0; a < t; ++a) {
                    v(static_cast<Eigen::Index>(base + off + a * stride)) = scratch[a];
                }
            }
        }
    }
    return PureState(std::move(v), dims);
}

Eigen::MatrixXcd tensor_power_matrix(const Eigen::MatrixXcd &U, int n, int ref_dim) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (int site = 0; site < n; ++site) {
        Eigen::MatrixXcd next(out.rows() * U.rows(), out.cols() * U.cols());
        for (Eigen::Index i = 0; i < out.rows(); ++i) {
            for (Eigen::Index j = 0; j < out.cols(); ++j) {
                next.block(i * U.rows(), j * U.cols(), U.rows(), U.cols()) = out(i, j) * U;
            }
        }
        out = std::move(next);
    }
    if (ref_dim == 1) {
        return out;
    }
    Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(out.rows() * ref_dim, out.cols() * ref_dim);
    for (Eigen::Index i = 0; i < out.rows(); ++i) {
        for (Eigen::Index j = 0; j < out.cols(); ++j) {
            for (int r = 0; r < ref_dim; ++r) {
                full(i * ref_dim + r, j * ref_dim + r) = out(i, j);
            }
        }
    }
    return full;
}

PureState bs4_state(int n) {
    if (n < 1) {
        throw std::invalid_argument("bs4_state: n must be positive");
    }
    const Dims dims{n, 2, 1};
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dims.total()));
    const double amp = 1.0 / std::sqrt(static_cast<double>(n + 1));
    for (int zeros = 0; zeros <= n; ++zeros) {
        // j leading zeros then n - j ones: the low n - j bits set.
        const std::size_t index = (std::size_t{1} << (n - zeros)) - 1;
        v(static_cast<Eigen::Index>(index)) = amp;
    }
    return PureState(std::move(v), dims);
}

PureState noon_state(int n) {
    if (n < 1) {
        throw std::invalid_argument("noon_state: n must be positive");
    }
    const Dims dims{n, 2, 1};
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dims.total()));
    v(0) = 1.0 / std::sqrt(2.0);
    v(static_cast<Eigen::Index>(dims.total() - 1)) = 1.0 / std::sqrt(2.0);
    return PureState(std::move(v), dims);
}

Eigen::VectorXd spectrum(const DensityOperator &rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.matrix(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("spectrum: eigensolver did not converge");
    }
    return solver.eigenvalues();
}

double von_neumann_entropy(const DensityOperator &rho) {
    if (std::abs(rho.matrix().trace() - Complex(1.0, 0.0)) > kTraceTol) {
        throw std::invalid_argument("von_neumann_entropy: trace deviates from one");
    }
    const Eigen::VectorXd eig = spectrum(rho);
    double s = 0.0;
    for (double x : eig) {
        if (x > kEigenFloor) {
            s -= x * std::log(x);
        }
    }
    return s;
}

double trace_distance(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    const Eigen::MatrixXcd diff = a - b;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(0.5 * (diff + diff.adjoint()), Eigen::EigenvaluesOnly);
    return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

PureState random_pure_state(Dims dims, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXcd v(static_cast<Eigen::Index>(dims.total()));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        v(i) = Complex(re, im);
    }
    v /= v.norm();
    return PureState(std::move(v), dims);
}

}  // namespace metrocap::oracle
