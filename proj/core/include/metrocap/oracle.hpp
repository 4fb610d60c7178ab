#pragma once

// Brute-force dense-matrix model of n parallel applications of a unitary.
//
// Basis convention: the system register is (C^t)^{(x)n} with site 0 the most
// significant digit; an optional reference register C^r is the least
// significant factor, so the flat index is sys * r + ref.
//
// Everything here is deliberately naive and independent of the closed forms
// in capacity.hpp; it exists to check them.

#include "metrocap/distinguish.hpp"
#include "metrocap/rep_core.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace metrocap::oracle {

using Complex = std::complex<double>;

/// Largest state-space dimension (system times reference) the oracle accepts
/// for the multi-phase model.
inline constexpr std::size_t kMaxMpDimension = 4096;
/// Largest n for the SU(2) twirl.
inline constexpr int kMaxSu2Copies = 8;

struct Dims {
    int n = 1;
    int t = 2;
    int ref_dim = 1;

    std::size_t system_size() const;
    std::size_t total() const { return system_size() * static_cast<std::size_t>(ref_dim); }
    bool operator==(const Dims &) const = default;
};

class PureState {
  public:
    /// Throws unless the vector has unit norm within 1e-12 and matches dims.
    PureState(Eigen::VectorXcd amplitudes, Dims dims);

    const Eigen::VectorXcd &amplitudes() const { return amps_; }
    const Dims &dims() const { return dims_; }

  private:
    Eigen::VectorXcd amps_;
    Dims dims_;
};

class DensityOperator {
  public:
    /// Throws unless Hermitian, PSD and unit trace within 1e-10.
    DensityOperator(Eigen::MatrixXcd matrix, Dims dims);
    static DensityOperator from_pure(const PureState &psi);
    static DensityOperator maximally_mixed(Dims dims);

    const Eigen::MatrixXcd &matrix() const { return m_; }
    const Dims &dims() const { return dims_; }

  private:
    Eigen::MatrixXcd m_;
    Dims dims_;
};

/// Group elements for a discrimination experiment: phase vectors for the
/// multi-phase model, or 2x2 special-unitary matrices.
class Codebook {
  public:
    enum class Kind { Phases, SpecialUnitary2 };

    static Codebook from_phases(std::vector<std::vector<double>> phases);
    static Codebook from_lattice(const LatticeCodebook &lattice);
    static Codebook from_su2(std::vector<Eigen::Matrix2cd> elements);
    /// Seeded Haar-random SU(2) elements.
    static Codebook haar_su2(std::size_t count, std::uint64_t seed);

    Kind kind() const { return kind_; }
    std::size_t size() const;
    const std::vector<std::vector<double>> &phases() const { return phases_; }
    const std::vector<Eigen::Matrix2cd> &su2() const { return su2_; }

  private:
    Kind kind_ = Kind::Phases;
    std::vector<std::vector<double>> phases_;
    std::vector<Eigen::Matrix2cd> su2_;
};

/// diag(1, e^{i theta_1}, ..., e^{i theta_{t-1}}).
Eigen::MatrixXcd mp_unitary(std::span<const double> theta, int t);

/// Haar-distributed element of SU(2).
Eigen::Matrix2cd haar_su2(std::mt19937_64 &rng);

/// (U^{(x)n} (x) I_ref) |psi>.
PureState tensor_power_apply(const Eigen::MatrixXcd &U, int n, const PureState &psi);
/// U^{(x)n} (x) I_ref as an explicit matrix.
Eigen::MatrixXcd tensor_power_matrix(const Eigen::MatrixXcd &U, int n, int ref_dim = 1);

/// sum_j |0^j 1^{n-j}> / sqrt(n + 1).
PureState bs4_state(int n);
/// (|0...0> + |1...1>) / sqrt 2.
PureState noon_state(int n);

/// Haar average over the torus, realized as the uniform average over the
/// grid {2 pi k / N}^{t-1}. Any N > n gives the exact twirl; grid = 0 picks
/// N = n + 1.
DensityOperator mp_twirl(const DensityOperator &rho, int n, int t, int grid = 0);

/// Orthonormal basis of (C^2)^{(x)n} adapted to the Schur-Weyl decomposition.
class Su2SchurBasis {
  public:
    struct Block {
        int two_j;
        int dim;
        int mult;
        /// First column belonging to this block.
        int offset;
        /// Column of |j, m_index, a>; m runs j, j-1, ..., -j.
        int column(int m_index, int a) const { return offset + m_index * mult + a; }
    };

    explicit Su2SchurBasis(int n);

    int n() const { return n_; }
    /// Unitary whose columns are the Schur vectors, in block order.
    const Eigen::MatrixXcd &unitary() const { return w_; }
    const std::vector<Block> &blocks() const { return blocks_; }

  private:
    int n_;
    Eigen::MatrixXcd w_;
    std::vector<Block> blocks_;
};

/// SU(2) twirl via isotypic projectors:
/// T(rho) = sum_lambda (I_{U_lambda} / d_lambda) (x) Tr_{U_lambda}[P_lambda rho P_lambda].
DensityOperator su2_twirl(const DensityOperator &rho, int n);
DensityOperator su2_twirl(const DensityOperator &rho, const Su2SchurBasis &basis);

/// Sample-mean estimate of the same twirl from Haar-random unitaries.
DensityOperator su2_twirl_monte_carlo(const DensityOperator &rho, int n, std::size_t samples, std::uint64_t seed);

/// Optimal SU(2) input: per-block maximally entangled states on U_lambda (x)
/// C^{d_lambda} with weights d_lambda / sqrt(sum d^2); reference dimension n + 1.
PureState bn1_state_su2(int n);

/// Ascending eigenvalues.
Eigen::VectorXd spectrum(const DensityOperator &rho);
/// -sum lambda log lambda over eigenvalues above 1e-12.
double von_neumann_entropy(const DensityOperator &rho);

/// 0.5 * ||a - b||_1.
double trace_distance(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b);

struct SrmResult {
    double success_prob = 0.0;
    std::size_t codebook_size = 0;
    double min_gram_eigenvalue = 0.0;
    /// Gram matrix has an eigenvalue below 1e-12: the states are linearly
    /// dependent and the measurement acts on a smaller span.
    bool degenerate = false;
};

/// Square-root measurement on the equiprobable ensemble {f(g_j)|psi>}.
SrmResult srm_discrimination(const Codebook &codebook, const PureState &psi, int n, int t);

/// f(g_j)|psi> for every codebook element, as columns.
Eigen::MatrixXcd codebook_states(const Codebook &codebook, const PureState &psi, int n, int t);

/// Explicit SRM POVM elements S^{-1/2} |v_j><v_j| S^{-1/2}, S = sum_j |v_j><v_j|,
/// with the inverse taken on the span. They sum to the projector onto the span.
std::vector<Eigen::MatrixXcd> srm_povm(const Eigen::MatrixXcd &states);

/// S(T_G(|psi><psi|)) with the model's exact twirl.
double empirical_mi(const PureState &psi, Model model, int n, int t);

/// Unit-norm vector with i.i.d. complex Gaussian amplitudes.
PureState random_pure_state(Dims dims, std::mt19937_64 &rng);

}  // namespace metrocap::oracle
