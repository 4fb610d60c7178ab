#include "metrocap/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace metrocap::oracle {

namespace {

constexpr double kGramFloor = 1e-12;

}  // namespace

Eigen::MatrixXcd codebook_states(const Codebook &codebook, const PureState &psi, int n, int t) {
    const Dims &dims = psi.dims();
    if (dims.n != n || dims.t != t) {
        throw std::invalid_argument("codebook_states: dimension mismatch");
    }
    if (codebook.kind() == Codebook::Kind::SpecialUnitary2 && t != 2) {
        throw std::invalid_argument("codebook_states: SU(2) codebook needs t = 2");
    }
    const auto m = static_cast<Eigen::Index>(codebook.size());
    Eigen::MatrixXcd states(static_cast<Eigen::Index>(dims.total()), m);
    for (Eigen::Index j = 0; j < m; ++j) {
        const auto idx = static_cast<std::size_t>(j);
        const Eigen::MatrixXcd u = codebook.kind() == Codebook::Kind::Phases
                                       ? mp_unitary(codebook.phases()[idx], t)
                                       : Eigen::MatrixXcd(codebook.su2()[idx]);
        states.col(j) = tensor_power_apply(u, n, psi).amplitudes();
    }
    return states;
}

SrmResult srm_discrimination(const Codebook &codebook, const PureState &psi, int n, int t) {
    if (codebook.size() == 0) {
        throw std::invalid_argument("srm_discrimination: empty codebook");
    }
    const Eigen::MatrixXcd states = codebook_states(codebook, psi, n, t);
    // For pure states the SRM overlap <v_j|S^{-1/2}|v_j> is the diagonal of
    // the Gram matrix square root, with or without full rank.
    const Eigen::MatrixXcd gram = states.adjoint() * states;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(0.5 * (gram + gram.adjoint()));
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("srm_discrimination: eigensolver did not converge");
    }
    // Eigenvalues at the noise floor belong to the kernel; their square roots
    // would otherwise leak ~1e-8 into the diagonal.
    Eigen::VectorXd eig = solver.eigenvalues();
    for (Eigen::Index i = 0; i < eig.size(); ++i) {
        eig(i) = eig(i) > kGramFloor ? eig(i) : 0.0;
    }
    const Eigen::MatrixXcd &vecs = solver.eigenvectors();
    const Eigen::MatrixXcd root = vecs * eig.cwiseSqrt().asDiagonal() * vecs.adjoint();

    SrmResult r;
    r.codebook_size = codebook.size();
    r.min_gram_eigenvalue = solver.eigenvalues().minCoeff();
    r.degenerate = r.min_gram_eigenvalue < kGramFloor;
    double total = 0.0;
    for (Eigen::Index j = 0; j < root.rows(); ++j) {
        total += std::norm(root(j, j));
    }
    r.success_prob = std::min(1.0, total / static_cast<double>(root.rows()));
    return r;
}

std::vector<Eigen::MatrixXcd> srm_povm(const Eigen::MatrixXcd &states) {
    const Eigen::MatrixXcd frame = states * states.adjoint();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(0.5 * (frame + frame.adjoint()));
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("srm_povm: eigensolver did not converge");
    }
    Eigen::VectorXd inv_root = solver.eigenvalues();
    for (Eigen::Index i = 0; i < inv_root.size(); ++i) {
        inv_root(i) = inv_root(i) > kGramFloor ? 1.0 / std::sqrt(inv_root(i)) : 0.0;
    }
    const Eigen::MatrixXcd &vecs = solver.eigenvectors();
    const Eigen::MatrixXcd s_inv_root = vecs * inv_root.asDiagonal() * vecs.adjoint();
    std::vector<Eigen::MatrixXcd> povm;
    povm.reserve(static_cast<std::size_t>(states.cols()));
    for (Eigen::Index j = 0; j < states.cols(); ++j) {
        const Eigen::VectorXcd mu = s_inv_root * states.col(j);
        povm.push_back(mu * mu.adjoint());
    }
    return povm;
}

}  // namespace metrocap::oracle
