#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace fockport {

enum class GridQuantity {
  AverageFidelity,  // rendered 0 -> black, 1 -> white
  ArgmaxPhase,      // rendered 0 -> black, pi/2 -> white
};

/// Values over (m, beta) cells at fixed total photon number. Storage is
/// m-major: value(i_m, i_beta) = values[i_m * beta_axis.size() + i_beta].
/// Cells whose (total, m) pair has no integer Fock inputs hold NaN.
struct FidelityGrid {
  GridQuantity quantity = GridQuantity::AverageFidelity;
  int total = 0;
  std::string label;
  std::vector<double> beta_axis;
  std::vector<int> twice_m_axis;
  std::vector<double> values;

  std::size_t width() const noexcept { return beta_axis.size(); }
  std::size_t height() const noexcept { return twice_m_axis.size(); }
  double& at(std::size_t i_m, std::size_t i_beta) {
    return values[i_m * width() + i_beta];
  }
  double at(std::size_t i_m, std::size_t i_beta) const {
    return values[i_m * width() + i_beta];
  }
  bool valid(std::size_t i_m, std::size_t i_beta) const;
  std::size_t invalid_count() const;
  /// Value that maps to white in the grayscale rendering.
  double full_scale() const noexcept;
};

/// `steps` uniform angles strictly inside (0, pi): beta_k = pi (k+1)/(steps+1).
/// With odd `steps` the middle entry is pi/2.
std::vector<double> interior_beta_axis(int steps);

/// Twice-valued m axis from `first` to `last` inclusive in `step` increments;
/// all three are twice the half-integer values.
std::vector<int> twice_m_range(int twice_first, int twice_last,
                               int twice_step = 2);

}  // namespace fockport
