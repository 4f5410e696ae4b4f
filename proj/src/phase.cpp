#include "fockport/phase.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <unsupported/Eigen/FFT>

#include "fockport/error.hpp"
#include "fockport/numerics.hpp"
#include "parallel.hpp"

namespace fockport {

namespace {

// i^k, exact.
Complex i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

// Coefficients the phase states are projected on, indexed by n.
std::vector<Complex> frame_coeffs(const ResourceCoeffs& resource,
                                  PhaseFrame frame) {
  std::vector<Complex> a = resource.coeffs;
  if (frame == PhaseFrame::Rotation) {
    // Undo exp(-i pi/2 (n - n_in)).
    for (std::size_t n = 0; n < a.size(); ++n) {
      a[n] *= i_power(static_cast<int>(n) - resource.params.n_in);
    }
  }
  return a;
}

void check_grid(int grid_size, int minimum) {
  if (grid_size < minimum) {
    fail(ErrorKind::InvalidArgument,
         "phase grid needs at least " + std::to_string(minimum) + " points");
  }
}

double grid_phi(int k, int grid_size) {
  return 2.0 * std::numbers::pi * k / grid_size;
}

}  // namespace

double joint_phase_prob(const ResourceCoeffs& resource, double phi_minus,
                        PhaseFrame frame) {
  const auto a = frame_coeffs(resource, frame);
  Complex sum{};
  for (std::size_t n = 0; n < a.size(); ++n) {
    sum += std::polar(1.0, static_cast<double>(n) * phi_minus) * a[n];
  }
  return std::norm(sum);
}

PhaseProfile phase_profile(const ResourceCoeffs& resource, int grid_size,
                           PhaseFrame frame) {
  check_grid(grid_size, 1);
  const auto a = frame_coeffs(resource, frame);

  // sum_n a_n exp(+2 pi i k n / G) = conj(sum_n conj(a_n) exp(-2 pi i k n / G)).
  // Indices beyond the grid fold back modulo G.
  std::vector<Complex> folded(static_cast<std::size_t>(grid_size));
  for (std::size_t n = 0; n < a.size(); ++n) {
    folded[n % folded.size()] += std::conj(a[n]);
  }
  std::vector<Complex> spectrum;
  Eigen::FFT<double> fft;
  fft.fwd(spectrum, folded);

  PhaseProfile out;
  out.phi_axis.resize(folded.size());
  out.values.resize(folded.size());
  for (int k = 0; k < grid_size; ++k) {
    out.phi_axis[k] = grid_phi(k, grid_size);
    out.values[k] = std::norm(spectrum[k]);
  }
  return out;
}

PhaseProfile phase_profile_direct(const ResourceCoeffs& resource,
                                  int grid_size, PhaseFrame frame) {
  check_grid(grid_size, 1);
  PhaseProfile out;
  out.phi_axis.resize(static_cast<std::size_t>(grid_size));
  out.values.resize(static_cast<std::size_t>(grid_size));
  for (int k = 0; k < grid_size; ++k) {
    out.phi_axis[k] = grid_phi(k, grid_size);
    out.values[k] = joint_phase_prob(resource, out.phi_axis[k], frame);
  }
  return out;
}

PhaseArgmax phase_argmax(const ResourceCoeffs& resource, int grid_size,
                         PhaseFrame frame) {
  check_grid(grid_size, 16);
  const auto profile = phase_profile(resource, grid_size, frame);
  double p_max = 0.0;
  for (double v : profile.values) p_max = std::max(p_max, v);
  const double threshold = p_max * (1.0 - kArgmaxTieTolerance);
  for (std::size_t k = 0; k < profile.values.size(); ++k) {
    if (profile.values[k] >= threshold) {
      return {profile.phi_axis[k], p_max};
    }
  }
  return {0.0, p_max};
}

FidelityGrid phase_argmax_map(int total, const std::vector<double>& beta_axis,
                              const std::vector<int>& twice_m_axis,
                              int grid_size, SweepOptions options) {
  if (total < 0) fail(ErrorKind::InvalidArgument, "total must be >= 0");
  check_grid(grid_size, 16);
  for (double beta : beta_axis) check_beta(beta);

  FidelityGrid grid;
  grid.quantity = GridQuantity::ArgmaxPhase;
  grid.total = total;
  grid.label = "phase-argmax(grid=" + std::to_string(grid_size) + ")";
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
    grid.values[i] =
        phase_argmax(resource_coeffs(params, generator), grid_size).phi_star;
  });
  return grid;
}

}  // namespace fockport
