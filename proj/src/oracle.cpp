#include "fockport/oracle.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "fockport/error.hpp"
#include "fockport/numerics.hpp"

namespace fockport::oracle {

SectorHamiltonian SectorHamiltonian::for_total(int total) {
  if (total < 0) fail(ErrorKind::InvalidArgument, "total must be >= 0");
  SectorHamiltonian h{total, std::vector<double>(static_cast<std::size_t>(total))};
  for (int n = 0; n < total; ++n) {
    // a^dag b |n, 2N-n> = sqrt(n+1) sqrt(2N-n) |n+1, 2N-n-1>
    h.offdiag[n] = 0.5 * std::sqrt(static_cast<double>(n + 1) * (total - n));
  }
  return h;
}

Eigen::MatrixXd SectorHamiltonian::dense() const {
  const int dim = dimension();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for (int n = 0; n + 1 < dim; ++n) {
    m(n, n + 1) = offdiag[n];
    m(n + 1, n) = offdiag[n];
  }
  return m;
}

Eigen::MatrixXcd sector_unitary(int total, double beta) {
  check_beta(beta);
  const auto h = SectorHamiltonian::for_total(total).dense();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  if (solver.info() != Eigen::Success) {
    fail(ErrorKind::InvalidArgument, "sector eigensolver failed");
  }
  const Eigen::VectorXcd phases =
      (Complex(0.0, beta) * solver.eigenvalues().cast<Complex>())
          .array()
          .exp()
          .matrix();
  const Eigen::MatrixXcd v = solver.eigenvectors().cast<Complex>();
  return v * phases.asDiagonal() * v.transpose();
}

std::vector<Complex> sector_unitary_column(const ResourceParams& params) {
  params.validate();
  const Eigen::MatrixXcd u = sector_unitary(params.total(), params.beta);
  std::vector<Complex> col(static_cast<std::size_t>(u.rows()));
  for (Eigen::Index n = 0; n < u.rows(); ++n) col[n] = u(n, params.n_in);
  return col;
}

ResourceCheck verify_resource(const ResourceParams& params, double tolerance,
                              int max_total) {
  params.validate();
  if (params.total() > max_total) {
    fail(ErrorKind::Size, "verify_resource: total " +
                              std::to_string(params.total()) +
                              " above oracle cap " + std::to_string(max_total));
  }
  const auto expected = sector_unitary_column(params);
  const auto actual = resource_coeffs(params).coeffs;

  Complex inner{};
  double norm_e = 0.0, norm_a = 0.0;
  for (std::size_t n = 0; n < expected.size(); ++n) {
    inner += std::conj(expected[n]) * actual[n];
    norm_e += std::norm(expected[n]);
    norm_a += std::norm(actual[n]);
  }
  ResourceCheck out;
  out.params = params;
  out.overlap_abs = std::abs(inner) / std::sqrt(norm_e * norm_a);
  out.residual_phase = std::arg(inner);
  const Complex rotate = std::polar(1.0, out.residual_phase);
  for (std::size_t n = 0; n < expected.size(); ++n) {
    out.max_deviation =
        std::max(out.max_deviation, std::abs(actual[n] - rotate * expected[n]));
  }
  out.pass = (1.0 - out.overlap_abs) < tolerance;
  return out;
}

BruteForceOutcome protocol_brute_force(const TargetCoeffs& target,
                                       const ResourceParams& params, int q,
                                       double phi_minus) {
  params.validate();
  if (params.total() > kMaxBruteForceTotal ||
      target.cutoff() > kMaxBruteForceCutoff) {
    fail(ErrorKind::Size, "protocol_brute_force: instance exceeds dense caps");
  }
  if (q < 0) fail(ErrorKind::InvalidArgument, "number-sum outcome q < 0");

  const int total = params.total();
  const int dim_t = target.cutoff() + 1;
  const int dim_a = total + 1;
  const int dim_b = total + 1;
  const auto index = [&](int t, int a, int b) {
    return (static_cast<Eigen::Index>(t) * dim_a + a) * dim_b + b;
  };

  // Joint pure state sum_{m,n} c_m u_n |m>_T |n>_A |2N-n>_B.
  const auto u = sector_unitary_column(params);
  Eigen::VectorXcd joint = Eigen::VectorXcd::Zero(
      static_cast<Eigen::Index>(dim_t) * dim_a * dim_b);
  for (int t = 0; t < dim_t; ++t) {
    for (int a = 0; a < dim_a; ++a) {
      joint[index(t, a, total - a)] = target.coeffs[t] * u[a];
    }
  }

  // Contract T and A against sum_w exp(2 i w phi) <w|_T <q-w|_A.
  Eigen::VectorXcd bob = Eigen::VectorXcd::Zero(dim_b);
  for (int w = 0; w <= q; ++w) {
    const int a = q - w;
    if (w >= dim_t || a >= dim_a) continue;
    const Complex bra = std::polar(1.0, 2.0 * w * phi_minus);
    for (int b = 0; b < dim_b; ++b) bob[b] += bra * joint[index(w, a, b)];
  }
  const double p_q = bob.squaredNorm();
  if (p_q == 0.0) {
    fail(ErrorKind::UndefinedOutcome, "brute force: outcome has zero weight");
  }

  // Amplification |2N-n> -> |q-n> then the phase shift exp(2 i n phi).
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(q + 1);
  for (int b = 0; b < dim_b; ++b) {
    const int n = total - b;
    if (n > q) continue;
    out[q - n] = bob[b] * std::polar(1.0, 2.0 * n * phi_minus);
  }

  BruteForceOutcome result;
  result.p_q = p_q;
  result.rho_fock = out * out.adjoint() / p_q;

  Eigen::VectorXcd psi(q + 1);
  for (int k = 0; k <= q; ++k) psi[k] = target.at(k);
  result.fidelity = (psi.adjoint() * result.rho_fock * psi)(0, 0).real();

  const int rows = std::min(q, total) + 1;
  result.rho_out.q = q;
  result.rho_out.matrix.resize(rows, rows);
  for (int n = 0; n < rows; ++n) {
    for (int np = 0; np < rows; ++np) {
      result.rho_out.matrix(n, np) = result.rho_fock(q - n, q - np);
    }
  }
  return result;
}

}  // namespace fockport::oracle
