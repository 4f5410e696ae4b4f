#pragma once

#include <Eigen/Dense>

#include "fockport/states.hpp"

namespace fockport {

/// Bob's conditional state for number-sum outcome q. Row/column i refers to the
/// Fock state |q - i>, i = 0..min(q, 2N).
struct OutputState {
  int q = 0;
  Eigen::MatrixXcd matrix;

  int dimension() const noexcept { return static_cast<int>(matrix.rows()); }
  int fock_index(int row) const noexcept { return q - row; }

  Complex trace() const { return matrix.trace(); }
  double hermiticity_defect() const;
  double min_eigenvalue() const;
  /// <psi_T| rho |psi_T>.
  double fidelity_with(const TargetCoeffs& target) const;
};

}  // namespace fockport
