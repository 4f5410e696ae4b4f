#include "fockport/states.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "fockport/error.hpp"
#include "fockport/numerics.hpp"

namespace fockport {

void ResourceParams::validate() const {
  if (n_in < 0 || m_in < 0) {
    fail(ErrorKind::InvalidArgument, "photon numbers must be non-negative");
  }
  check_beta(beta);
}

bool ResourceParams::compatible(int total, int twice_m) noexcept {
  return total >= 0 && std::abs(twice_m) <= total &&
         (total + twice_m) % 2 == 0;
}

ResourceParams ResourceParams::from_total(int total, int twice_m,
                                          double beta) {
  if (!compatible(total, twice_m)) {
    fail(ErrorKind::InvalidArgument,
         "no integer Fock inputs for total " + std::to_string(total) +
             " and m = " + std::to_string(twice_m / 2.0));
  }
  ResourceParams p{(total + twice_m) / 2, (total - twice_m) / 2, beta};
  p.validate();
  return p;
}

double TargetCoeffs::norm_squared() const noexcept {
  double s = 0.0;
  for (const auto& c : coeffs) s += std::norm(c);
  return s;
}

namespace {

// (-i)^k for integer k, exact.
Complex minus_i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, -1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, 1.0};
  }
}

}  // namespace

ResourceCoeffs resource_coeffs(const ResourceParams& params,
                               const RotationGenerator& generator) {
  params.validate();
  if (generator.twice_j() != params.total()) {
    fail(ErrorKind::InvalidArgument,
         "rotation generator built for a different photon total");
  }
  const auto column = generator.column(params.twice_m(), params.beta);
  ResourceCoeffs out{params, std::vector<Complex>(column.size())};
  // n - N - m = n - n_in.
  for (std::size_t n = 0; n < column.size(); ++n) {
    out.coeffs[n] =
        minus_i_power(static_cast<int>(n) - params.n_in) * column[n];
  }
  return out;
}

ResourceCoeffs resource_coeffs(const ResourceParams& params) {
  params.validate();
  return resource_coeffs(params, RotationGenerator(params.total()));
}

namespace {

// |amplitude|^2 of the coherent-state Poisson weight at photon number m.
double log_poisson_amplitude(double abs_alpha, int m) {
  if (abs_alpha == 0.0) {
    return m == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
  }
  return -0.5 * abs_alpha * abs_alpha + m * std::log(abs_alpha) -
         0.5 * log_factorial(static_cast<std::size_t>(m));
}

// Probability weight beyond `cutoff` for the unnormalized builder weights,
// summed until the terms are negligible.
double tail_weight(double abs_alpha, int cutoff, double scale, bool even_only) {
  const double mean = abs_alpha * abs_alpha;
  double tail = 0.0;
  for (int m = cutoff + 1;; ++m) {
    if (even_only && m % 2 == 1) continue;
    const double w = scale * std::exp(2.0 * log_poisson_amplitude(abs_alpha, m));
    tail += w;
    if (m > mean && w < 1e-30 * std::max(tail, 1e-300)) break;
    if (w == 0.0 && m > mean) break;
  }
  return tail;
}

TargetCoeffs build_superposition(Complex alpha, int cutoff, bool even_cat,
                                 double tail_tolerance, std::string label) {
  if (cutoff < 0) fail(ErrorKind::InvalidArgument, "cutoff must be >= 0");
  const double abs_alpha = std::abs(alpha);
  const double arg_alpha = std::arg(alpha);
  // The even cat doubles the even Poisson amplitudes and divides by
  // sqrt(2 + 2 exp(-2|alpha|^2)), so each weight scales by
  // 4 / (2 + 2 exp(-2|alpha|^2)).
  const double scale =
      even_cat ? 4.0 / (2.0 + 2.0 * std::exp(-2.0 * abs_alpha * abs_alpha))
               : 1.0;

  TargetCoeffs out{std::vector<Complex>(static_cast<std::size_t>(cutoff) + 1),
                   std::move(label)};
  for (int m = 0; m <= cutoff; ++m) {
    if (even_cat && m % 2 == 1) continue;
    const double mag =
        std::sqrt(scale) * std::exp(log_poisson_amplitude(abs_alpha, m));
    out.coeffs[m] = std::polar(mag, m * arg_alpha);
  }

  const double tail = tail_weight(abs_alpha, cutoff, scale, even_cat);
  if (tail >= tail_tolerance) {
    std::ostringstream msg;
    msg << "cutoff " << cutoff << " discards probability " << tail
        << " for |alpha| = " << abs_alpha << "; need cutoff >= "
        << minimal_cutoff(abs_alpha,
                          even_cat ? TargetKind::EvenCat : TargetKind::Coherent);
    fail(ErrorKind::Truncation, msg.str());
  }
  const double norm = std::sqrt(out.norm_squared());
  for (auto& c : out.coeffs) c /= norm;
  return out;
}

std::string alpha_label(const char* kind, Complex alpha) {
  std::ostringstream s;
  s << kind << "(alpha=" << alpha.real();
  if (alpha.imag() != 0.0) s << (alpha.imag() < 0 ? "" : "+") << alpha.imag() << "i";
  s << ")";
  return s.str();
}

}  // namespace

TargetCoeffs cat_coeffs(Complex alpha, int cutoff, double tail_tolerance) {
  return build_superposition(alpha, cutoff, true, tail_tolerance,
                             alpha_label("cat", alpha));
}

TargetCoeffs coherent_coeffs(Complex alpha, int cutoff,
                             double tail_tolerance) {
  return build_superposition(alpha, cutoff, false, tail_tolerance,
                             alpha_label("coherent", alpha));
}

TargetCoeffs fock_coeffs(int k, int cutoff) {
  if (cutoff < 0) fail(ErrorKind::InvalidArgument, "cutoff must be >= 0");
  if (k < 0 || k > cutoff) {
    fail(ErrorKind::Range, "Fock index " + std::to_string(k) +
                               " outside [0, " + std::to_string(cutoff) + "]");
  }
  TargetCoeffs out{std::vector<Complex>(static_cast<std::size_t>(cutoff) + 1),
                   "fock(k=" + std::to_string(k) + ")"};
  out.coeffs[k] = 1.0;
  return out;
}

int minimal_cutoff(double abs_alpha, TargetKind kind) {
  const bool even = kind == TargetKind::EvenCat;
  const double scale =
      even ? 4.0 / (2.0 + 2.0 * std::exp(-2.0 * abs_alpha * abs_alpha)) : 1.0;
  int cutoff = 0;
  while (tail_weight(abs_alpha, cutoff, scale, even) >= kTruncationTolerance) {
    ++cutoff;
  }
  return cutoff;
}

}  // namespace fockport
