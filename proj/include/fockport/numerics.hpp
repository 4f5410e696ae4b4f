#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace fockport {

/// ln(n!) for n = 0..max_n, built once by cumulative addition of ln(k).
/// Immutable after construction.
class LogFactorialTable {
 public:
  static constexpr std::size_t kDefaultMaxN = 4096;

  explicit LogFactorialTable(std::size_t max_n = kDefaultMaxN);

  /// Throws Error{Range} when n > max_n().
  double operator()(std::size_t n) const;

  std::size_t max_n() const noexcept { return values_.size() - 1; }
  std::span<const double> values() const noexcept { return values_; }

 private:
  std::vector<double> values_;
};

/// Process-wide table covering at least `min_n`. Grows on demand; references
/// handed out earlier stay valid for the lifetime of the process.
const LogFactorialTable& shared_log_factorials(std::size_t min_n = 0);

/// ln(n!) from the shared table.
double log_factorial(std::size_t n);

/// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) noexcept;
  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

/// Addresses D^j_{m_row, m_col}. Half-integers are stored as twice their
/// value so that parity checks stay exact.
struct WignerIndex {
  int twice_j = 0;
  int twice_m_row = 0;
  int twice_m_col = 0;

  /// Throws Error{InvalidArgument} unless |m| <= j and all three share parity.
  void validate() const;
};

/// Real small-d element by the explicit factorial sum, each term evaluated as
/// sign * exp(log-magnitude) and accumulated in increasing s with compensated
/// summation. Accurate in double precision up to roughly j = 20; beyond that
/// the alternating sum loses digits to cancellation.
double wigner_d_direct(const WignerIndex& idx, double beta);

/// Eigensystem of the (2j+1)x(2j+1) generator J_x written in the J_z basis,
/// i.e. the symmetric tridiagonal matrix with off-diagonal
/// 1/2 sqrt((j - m)(j + m + 1)) between m and m + 1. The spectrum is
/// -j, -j+1, ..., j; the computed eigenvalues are replaced by these exact
/// values. Independent of beta, so one instance serves a whole sweep.
class RotationGenerator {
 public:
  explicit RotationGenerator(int twice_j);

  int twice_j() const noexcept { return twice_j_; }
  int dimension() const noexcept { return twice_j_ + 1; }

  /// Column D^j_{m', m_col}(beta) for m' = -j..j (ascending).
  std::vector<double> column(int twice_m_col, double beta) const;

  /// Column of exp(i beta J_x), ascending m'. This is the beam-splitter action
  /// on the two-mode sector labelled by j.
  std::vector<std::complex<double>> exp_ijx_column(int twice_m_col,
                                                   double beta) const;

  /// Full small-d matrix, rows m', columns m, both ascending.
  Eigen::MatrixXd matrix(double beta) const;

  const Eigen::MatrixXd& eigenvectors() const noexcept { return vectors_; }

 private:
  int twice_j_;
  Eigen::MatrixXd vectors_;
};

/// Column of D^j_{m', m_col}(beta) through the eigendecomposition of J_x.
/// Stable at every j; agrees with wigner_d_direct where that is well
/// conditioned.
std::vector<double> wigner_d_column_stable(int twice_j, int twice_m_col,
                                           double beta);

/// Throws Error{InvalidArgument} unless 0 <= beta <= pi.
void check_beta(double beta);

}  // namespace fockport
