#include "fockport/output_state.hpp"

#include <Eigen/Eigenvalues>

namespace fockport {

double OutputState::hermiticity_defect() const {
  if (matrix.size() == 0) return 0.0;
  return (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
}

double OutputState::min_eigenvalue() const {
  if (matrix.size() == 0) return 0.0;
  // Hermitian part only; the defect is reported separately.
  const Eigen::MatrixXcd h = 0.5 * (matrix + matrix.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h,
                                                         Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

double OutputState::fidelity_with(const TargetCoeffs& target) const {
  const int dim = dimension();
  Eigen::VectorXcd psi(dim);
  for (int i = 0; i < dim; ++i) psi[i] = target.at(fock_index(i));
  return (psi.adjoint() * matrix * psi)(0, 0).real();
}

}  // namespace fockport
