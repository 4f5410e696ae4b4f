#include "fockport/numerics.hpp"

#include <cmath>
#include <deque>
#include <limits>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

#include "fockport/error.hpp"

namespace fockport {

LogFactorialTable::LogFactorialTable(std::size_t max_n) : values_(max_n + 1) {
  values_[0] = 0.0;
  for (std::size_t n = 1; n <= max_n; ++n) {
    values_[n] = values_[n - 1] + std::log(static_cast<double>(n));
  }
}

double LogFactorialTable::operator()(std::size_t n) const {
  if (n >= values_.size()) {
    fail(ErrorKind::Range, "log_factorial: n = " + std::to_string(n) +
                               " exceeds table size " +
                               std::to_string(max_n()));
  }
  return values_[n];
}

const LogFactorialTable& shared_log_factorials(std::size_t min_n) {
  static std::mutex mutex;
  static std::deque<std::unique_ptr<const LogFactorialTable>> tables;
  std::lock_guard lock(mutex);
  if (tables.empty() || tables.back()->max_n() < min_n) {
    std::size_t size = tables.empty() ? LogFactorialTable::kDefaultMaxN
                                       : tables.back()->max_n();
    while (size < min_n) size *= 2;
    tables.push_back(std::make_unique<const LogFactorialTable>(size));
  }
  return *tables.back();
}

double log_factorial(std::size_t n) { return shared_log_factorials(n)(n); }

void CompensatedSum::add(double x) noexcept {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x)) {
    compensation_ += (sum_ - t) + x;
  } else {
    compensation_ += (x - t) + sum_;
  }
  sum_ = t;
}

void WignerIndex::validate() const {
  const bool ok = twice_j >= 0 && std::abs(twice_m_row) <= twice_j &&
                  std::abs(twice_m_col) <= twice_j &&
                  (twice_j - twice_m_row) % 2 == 0 &&
                  (twice_j - twice_m_col) % 2 == 0;
  if (!ok) {
    fail(ErrorKind::InvalidArgument,
         "invalid Wigner index (2j, 2m', 2m) = (" + std::to_string(twice_j) +
             ", " + std::to_string(twice_m_row) + ", " +
             std::to_string(twice_m_col) + ")");
  }
}

void check_beta(double beta) {
  if (!(beta >= 0.0 && beta <= std::numbers::pi)) {
    fail(ErrorKind::InvalidArgument,
         "beta must lie in [0, pi], got " + std::to_string(beta));
  }
}

namespace {

// x^k as a log, with 0^0 = 1. Returns -inf for 0^k, k > 0.
double log_power(double x, long k) {
  if (k == 0) return 0.0;
  if (x == 0.0) return -std::numeric_limits<double>::infinity();
  return static_cast<double>(k) * std::log(x);
}

}  // namespace

double wigner_d_direct(const WignerIndex& idx, double beta) {
  idx.validate();
  check_beta(beta);

  // Integer offsets; all well defined because of the shared parity.
  const long j_plus_mr = (idx.twice_j + idx.twice_m_row) / 2;
  const long j_minus_mr = (idx.twice_j - idx.twice_m_row) / 2;
  const long j_plus_mc = (idx.twice_j + idx.twice_m_col) / 2;
  const long j_minus_mc = (idx.twice_j - idx.twice_m_col) / 2;
  const long mr_minus_mc = (idx.twice_m_row - idx.twice_m_col) / 2;

  const auto& lf = shared_log_factorials(
      static_cast<std::size_t>(idx.twice_j) + 1);

  // Factorial arguments must be non-negative.
  const long s_min = std::max(0L, -mr_minus_mc);
  const long s_max = std::min(j_plus_mc, j_minus_mr);

  const double c = std::cos(beta / 2.0);
  const double s = std::sin(beta / 2.0);

  // The square-root prefactor is split against the matching denominator
  // factorials so the diagonal term at beta = 0 is exactly exp(0).
  const double half_plus = 0.5 * (lf(j_plus_mr) + lf(j_plus_mc));
  const double half_minus = 0.5 * (lf(j_minus_mr) + lf(j_minus_mc));

  CompensatedSum sum;
  for (long k = s_min; k <= s_max; ++k) {
    const long cos_power = idx.twice_j - mr_minus_mc - 2 * k;
    const long sin_power = mr_minus_mc + 2 * k;
    const double log_trig = log_power(c, cos_power) + log_power(s, sin_power);
    if (std::isinf(log_trig)) continue;
    const double log_mag = (half_plus - lf(j_plus_mc - k)) +
                           (half_minus - lf(j_minus_mr - k)) - lf(k) -
                           lf(mr_minus_mc + k) + log_trig;
    const bool negative = ((mr_minus_mc + k) % 2 + 2) % 2 == 1;
    const double term = std::exp(log_mag);
    sum.add(negative ? -term : term);
  }
  return sum.value();
}

RotationGenerator::RotationGenerator(int twice_j) : twice_j_(twice_j) {
  if (twice_j < 0) {
    fail(ErrorKind::InvalidArgument, "RotationGenerator: negative j");
  }
  const int dim = twice_j + 1;
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(dim);
  Eigen::VectorXd sub(std::max(dim - 1, 0));
  for (int k = 0; k + 1 < dim; ++k) {
    // m = -j + k
    const double twice_m = -twice_j + 2.0 * k;
    const double j_minus_m = (twice_j - twice_m) / 2.0;
    const double j_plus_m_plus_1 = (twice_j + twice_m) / 2.0 + 1.0;
    sub[k] = 0.5 * std::sqrt(j_minus_m * j_plus_m_plus_1);
  }
  if (dim == 1) {
    vectors_ = Eigen::MatrixXd::Identity(1, 1);
    return;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    fail(ErrorKind::InvalidArgument, "RotationGenerator: eigensolver failed");
  }
  // Eigenvalues come back ascending, i.e. -j, -j+1, ..., j.
  vectors_ = solver.eigenvectors();
}

namespace {

// Index of m in the ascending basis -j..j.
int basis_index(int twice_j, int twice_m) { return (twice_j + twice_m) / 2; }

double eigenvalue(int twice_j, int k) { return -twice_j / 2.0 + k; }

}  // namespace

std::vector<std::complex<double>> RotationGenerator::exp_ijx_column(
    int twice_m_col, double beta) const {
  WignerIndex{twice_j_, twice_m_col, twice_m_col}.validate();
  check_beta(beta);
  const int dim = dimension();
  const int col = basis_index(twice_j_, twice_m_col);

  std::vector<std::complex<double>> phasors(dim);
  for (int k = 0; k < dim; ++k) {
    phasors[k] = std::polar(1.0, beta * eigenvalue(twice_j_, k)) *
                 vectors_(col, k);
  }
  std::vector<std::complex<double>> out(dim);
  for (int r = 0; r < dim; ++r) {
    std::complex<double> acc{};
    for (int k = 0; k < dim; ++k) acc += vectors_(r, k) * phasors[k];
    out[r] = acc;
  }
  return out;
}

std::vector<double> RotationGenerator::column(int twice_m_col,
                                              double beta) const {
  WignerIndex{twice_j_, twice_m_col, twice_m_col}.validate();
  check_beta(beta);
  const int dim = dimension();
  const int col = basis_index(twice_j_, twice_m_col);

  // Endpoints are exact permutations: d(0) = 1, d_{m'm}(pi) = (-1)^{j-m'} delta_{m',-m}.
  if (beta == 0.0 || beta == std::numbers::pi) {
    std::vector<double> out(dim, 0.0);
    if (beta == 0.0) {
      out[col] = 1.0;
    } else {
      const int row = dim - 1 - col;
      out[row] = (row % 2 == 0) ? 1.0 : -1.0;
    }
    return out;
  }

  // d_{m'm} = Re(i^{m'-m} [exp(i beta J_x)]_{m'm}). With
  // [exp(i beta J_x)]_{m'm} = sum_k V(m',k) V(m,k) exp(i beta lambda_k) this
  // is the cosine sum for even m'-m and the sine sum for odd m'-m, up to sign.
  std::vector<double> cos_w(dim), sin_w(dim);
  for (int k = 0; k < dim; ++k) {
    const double angle = beta * eigenvalue(twice_j_, k);
    cos_w[k] = std::cos(angle) * vectors_(col, k);
    sin_w[k] = std::sin(angle) * vectors_(col, k);
  }
  std::vector<double> out(dim);
  for (int r = 0; r < dim; ++r) {
    const int shift = ((r - col) % 4 + 4) % 4;
    const std::vector<double>& w = (shift % 2 == 0) ? cos_w : sin_w;
    double acc = 0.0;
    for (int k = 0; k < dim; ++k) acc += vectors_(r, k) * w[k];
    // i^0 Re = +cos, i^1 -> -Im = -sin, i^2 -> -cos, i^3 -> +sin
    out[r] = (shift == 0 || shift == 3) ? acc : -acc;
  }
  return out;
}

Eigen::MatrixXd RotationGenerator::matrix(double beta) const {
  const int dim = dimension();
  Eigen::MatrixXd out(dim, dim);
  for (int c = 0; c < dim; ++c) {
    const auto col = column(-twice_j_ + 2 * c, beta);
    for (int r = 0; r < dim; ++r) out(r, c) = col[r];
  }
  return out;
}

std::vector<double> wigner_d_column_stable(int twice_j, int twice_m_col,
                                           double beta) {
  return RotationGenerator(twice_j).column(twice_m_col, beta);
}

}  // namespace fockport
