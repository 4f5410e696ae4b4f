#pragma once

#include <vector>

#include "fockport/grid.hpp"
#include "fockport/protocol.hpp"
#include "fockport/states.hpp"

namespace fockport {

/// Which coefficients the phase states are projected against.
///
/// Rotation: the real rotation column D^N_{n-N,m}(beta), i.e. the resource
/// with its quarter-wave prefactor exp(-i pi/2 (n - N - m)) removed. This is
/// the frame in which the 50:50, m = 0 resource peaks at phi = pi/2.
///
/// Resource: the amplitudes d_{n-N} as stored. Equal to the rotation frame
/// shifted by pi/2: P_resource(phi) = P_rotation(phi - pi/2).
enum class PhaseFrame { Rotation, Resource };

inline constexpr int kDefaultPhaseGrid = 4096;

/// Relative tolerance under which two profile values count as a tie.
inline constexpr double kArgmaxTieTolerance = 1e-12;

/// Unnormalized |sum_n exp(i n phi) a_n|^2 over a_n in the chosen frame.
double joint_phase_prob(const ResourceCoeffs& resource, double phi_minus,
                        PhaseFrame frame = PhaseFrame::Rotation);

struct PhaseProfile {
  std::vector<double> phi_axis;  // 2 pi k / size, k = 0..size-1
  std::vector<double> values;
};

/// Profile on a uniform grid over [0, 2 pi) by FFT.
PhaseProfile phase_profile(const ResourceCoeffs& resource, int grid_size,
                           PhaseFrame frame = PhaseFrame::Rotation);

/// Same grid, each point by direct summation.
PhaseProfile phase_profile_direct(const ResourceCoeffs& resource,
                                  int grid_size,
                                  PhaseFrame frame = PhaseFrame::Rotation);

struct PhaseArgmax {
  double phi_star = 0.0;
  double p_max = 0.0;
};

/// Grid argmax; values within kArgmaxTieTolerance of the maximum tie and the
/// smallest phi wins. grid_size must be at least 16.
PhaseArgmax phase_argmax(const ResourceCoeffs& resource,
                         int grid_size = kDefaultPhaseGrid,
                         PhaseFrame frame = PhaseFrame::Rotation);

/// phi_star over (m, beta) cells at fixed total.
FidelityGrid phase_argmax_map(int total, const std::vector<double>& beta_axis,
                              const std::vector<int>& twice_m_axis,
                              int grid_size = kDefaultPhaseGrid,
                              SweepOptions options = {});

}  // namespace fockport
