#pragma once

#include <vector>

#include <Eigen/Dense>

#include "fockport/output_state.hpp"
#include "fockport/states.hpp"

namespace fockport::oracle {

inline constexpr int kMaxResourceTotal = 60;
inline constexpr int kMaxBruteForceTotal = 8;
inline constexpr int kMaxBruteForceCutoff = 8;
inline constexpr double kResourceTolerance = 1e-10;

/// (a^dag b + b^dag a)/2 restricted to photon total 2N, basis
/// |n, 2N - n>, n = 0..2N.
struct SectorHamiltonian {
  int total = 0;
  std::vector<double> offdiag;  // entry n couples n and n + 1

  static SectorHamiltonian for_total(int total);
  int dimension() const noexcept { return total + 1; }
  Eigen::MatrixXd dense() const;
};

/// exp(i beta H) over the whole sector by dense eigendecomposition.
Eigen::MatrixXcd sector_unitary(int total, double beta);

/// exp(i beta H) |n_in, m_in>, indexed by n.
std::vector<Complex> sector_unitary_column(const ResourceParams& params);

struct ResourceCheck {
  ResourceParams params;
  double overlap_abs = 0.0;     // |<oracle|resource>| / norms
  double max_deviation = 0.0;   // after removing residual_phase
  double residual_phase = 0.0;  // arg <oracle|resource>
  bool pass = false;
};

/// Compares states::resource_coeffs with the sector unitary column. Mismatch
/// is reported through `pass`, not thrown. Throws Error{Size} above
/// max_total.
ResourceCheck verify_resource(const ResourceParams& params,
                              double tolerance = kResourceTolerance,
                              int max_total = kMaxResourceTotal);

struct BruteForceOutcome {
  double p_q = 0.0;
  OutputState rho_out;
  Eigen::MatrixXcd rho_fock;  // Bob's state on |0>..|q>
  double fidelity = 0.0;      // <psi_T| rho_fock |psi_T>
};

/// Literal dense simulation of the protocol for one (q, phi_minus): joint
/// T (x) A (x) B state, projection onto the joint number-sum/phase-difference
/// bra sum_w exp(2 i w phi) <w|_T <q-w|_A, Bob's relabeling and phase
/// correction. Throws Error{Size} beyond the dense caps and
/// Error{UndefinedOutcome} when p_q vanishes.
BruteForceOutcome protocol_brute_force(const TargetCoeffs& target,
                                       const ResourceParams& params, int q,
                                       double phi_minus);

}  // namespace fockport::oracle
