#include "fockport/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

#include "fockport/error.hpp"
#include "fockport/numerics.hpp"
#include "parallel.hpp"

namespace fockport {

namespace {

// n runs over resource indices with both c_{q-n} inside the target window and
// n <= min(q, 2N).
struct TermRange {
  int first;
  int last;  // inclusive; empty when last < first
};

TermRange term_range(const TargetCoeffs& target, const ResourceCoeffs& resource,
                     int q) {
  return {std::max(0, q - target.cutoff()), std::min(q, resource.total())};
}

double weight(const TargetCoeffs& target, int index) {
  return std::norm(target.coeffs[static_cast<std::size_t>(index)]);
}

void check_q(int q) {
  if (q < 0) fail(ErrorKind::InvalidArgument, "number-sum outcome q < 0");
}

// (P(q), sum_n |c_{q-n}|^2 d_{n-N}) in fixed increasing-n order.
std::pair<double, Complex> outcome_sums(const TargetCoeffs& target,
                                        const ResourceCoeffs& resource, int q) {
  const auto [first, last] = term_range(target, resource, q);
  double p = 0.0;
  Complex amplitude{};
  for (int n = first; n <= last; ++n) {
    const double w = weight(target, q - n);
    const Complex d = resource.coeffs[static_cast<std::size_t>(n)];
    p += w * std::norm(d);
    amplitude += w * d;
  }
  return {p, amplitude};
}

}  // namespace

double number_sum_prob(const TargetCoeffs& target,
                       const ResourceCoeffs& resource, int q) {
  check_q(q);
  return outcome_sums(target, resource, q).first;
}

bool OutcomeDistribution::defined(int q) const {
  if (q < q_min || q > q_max) return false;
  return !std::isnan(f[static_cast<std::size_t>(q - q_min)]);
}

double OutcomeDistribution::probability_sum() const {
  CompensatedSum s;
  for (double x : p) s.add(x);
  return s.value();
}

OutcomeDistribution outcome_distribution(const TargetCoeffs& target,
                                         const ResourceCoeffs& resource) {
  OutcomeDistribution out;
  out.q_min = 0;
  out.q_max = target.cutoff() + resource.total();
  const auto size = static_cast<std::size_t>(out.q_max + 1);
  out.p.resize(size);
  out.f.assign(size, std::numeric_limits<double>::quiet_NaN());
  for (int q = out.q_min; q <= out.q_max; ++q) {
    const auto [p, amplitude] = outcome_sums(target, resource, q);
    out.p[q] = p;
    if (p > kNegligibleOutcome) out.f[q] = std::norm(amplitude) / p;
  }
  return out;
}

double fidelity_given_q(const TargetCoeffs& target,
                        const ResourceCoeffs& resource, int q) {
  check_q(q);
  const auto [p, amplitude] = outcome_sums(target, resource, q);
  if (p == 0.0) {
    fail(ErrorKind::UndefinedOutcome,
         "F(q) undefined: P(" + std::to_string(q) + ") = 0");
  }
  return std::norm(amplitude) / p;
}

Complex fidelity_given_q_double_sum(const TargetCoeffs& target,
                                    const ResourceCoeffs& resource, int q) {
  check_q(q);
  const auto [first, last] = term_range(target, resource, q);
  double p = 0.0;
  Complex acc{};
  for (int n = first; n <= last; ++n) {
    const double wn = weight(target, q - n);
    const Complex dn = resource.coeffs[static_cast<std::size_t>(n)];
    p += wn * std::norm(dn);
    for (int np = first; np <= last; ++np) {
      const double wnp = weight(target, q - np);
      acc += wn * wnp * dn * std::conj(resource.coeffs[static_cast<std::size_t>(np)]);
    }
  }
  if (p == 0.0) {
    fail(ErrorKind::UndefinedOutcome,
         "F(q) undefined: P(" + std::to_string(q) + ") = 0");
  }
  return acc / p;
}

OutputState output_state(const TargetCoeffs& target,
                         const ResourceCoeffs& resource, int q,
                         double phi_minus) {
  check_q(q);
  const int rows = std::min(q, resource.total()) + 1;
  const double p = number_sum_prob(target, resource, q);
  if (p == 0.0) {
    fail(ErrorKind::UndefinedOutcome,
         "output state undefined: P(" + std::to_string(q) + ") = 0");
  }

  // Conditional Bob amplitudes carry exp(-2 i n phi) from the measurement; the
  // correction multiplies by the conjugate phasor, so each product is
  // |u|^2 = 1 up to rounding.
  Eigen::VectorXcd amplitude(rows);
  for (int n = 0; n < rows; ++n) {
    const Complex u = std::polar(1.0, 2.0 * n * phi_minus);
    const Complex measured = target.at(q - n) *
                             resource.coeffs[static_cast<std::size_t>(n)] *
                             std::conj(u);
    amplitude[n] = measured * u;
  }
  OutputState out;
  out.q = q;
  out.matrix = amplitude * amplitude.adjoint() / p;
  return out;
}

double average_fidelity(const TargetCoeffs& target,
                        const ResourceCoeffs& resource) {
  const auto dist = outcome_distribution(target, resource);
  double sum = 0.0;
  for (std::size_t i = 0; i < dist.p.size(); ++i) {
    if (!std::isnan(dist.f[i])) sum += dist.p[i] * dist.f[i];
  }
  return sum;
}

Complex average_fidelity_double_sum(const TargetCoeffs& target,
                                    const ResourceCoeffs& resource) {
  Complex total{};
  const int q_max = target.cutoff() + resource.total();
  for (int q = 0; q <= q_max; ++q) {
    const auto [first, last] = term_range(target, resource, q);
    for (int n = first; n <= last; ++n) {
      for (int np = first; np <= last; ++np) {
        total += weight(target, q - n) * weight(target, q - np) *
                 resource.coeffs[static_cast<std::size_t>(n)] *
                 std::conj(resource.coeffs[static_cast<std::size_t>(np)]);
      }
    }
  }
  return total;
}

double classical_baseline(const TargetCoeffs& target,
                          const ResourceParams& params) {
  params.validate();
  // Delta resource at n = n_in: P(q) = |c_{q-n_in}|^2 and F(q) = P(q).
  double sum = 0.0;
  for (const auto& c : target.coeffs) {
    const double w = std::norm(c);
    sum += w * w;
  }
  return sum;
}

FidelityGrid fidelity_sweep(const TargetCoeffs& target, int total,
                            const std::vector<double>& beta_axis,
                            const std::vector<int>& twice_m_axis,
                            SweepOptions options) {
  if (total < 0) fail(ErrorKind::InvalidArgument, "total must be >= 0");
  for (double beta : beta_axis) check_beta(beta);

  FidelityGrid grid;
  grid.quantity = GridQuantity::AverageFidelity;
  grid.total = total;
  grid.label = target.label;
  grid.beta_axis = beta_axis;
  grid.twice_m_axis = twice_m_axis;
  grid.values.assign(beta_axis.size() * twice_m_axis.size(),
                     std::numeric_limits<double>::quiet_NaN());

  const RotationGenerator generator(total);
  detail::parallel_for(grid.values.size(), options.threads, [&](std::size_t i) {
    const std::size_t i_m = i / grid.width();
    const std::size_t i_beta = i % grid.width();
    const int twice_m = twice_m_axis[i_m];
    if (!ResourceParams::compatible(total, twice_m)) return;
    const auto params =
        ResourceParams::from_total(total, twice_m, beta_axis[i_beta]);
    grid.values[i] = average_fidelity(target, resource_coeffs(params, generator));
  });
  return grid;
}

}  // namespace fockport
