#pragma once

#include <complex>
#include <string>
#include <vector>

namespace fockport {

class RotationGenerator;

using Complex = std::complex<double>;

/// Fock inputs |n_in>_A |m_in>_B and beam-splitter angle beta in [0, pi].
struct ResourceParams {
  int n_in = 0;
  int m_in = 0;
  double beta = 0.0;

  int total() const noexcept { return n_in + m_in; }
  /// Twice the input photon-number difference (n_in - m_in) / 2.
  int twice_m() const noexcept { return n_in - m_in; }
  int twice_j() const noexcept { return total(); }

  void validate() const;

  /// Inputs (N + m, N - m) for a sweep at fixed total 2N. Throws
  /// Error{InvalidArgument} when the pair is not two non-negative integers.
  static ResourceParams from_total(int total, int twice_m, double beta);
  static bool compatible(int total, int twice_m) noexcept;
};

/// Amplitudes d_{n-N} on |n>_A |2N - n>_B for n = 0..2N.
struct ResourceCoeffs {
  ResourceParams params;
  std::vector<Complex> coeffs;

  int total() const noexcept { return params.total(); }
};

/// Fock-basis amplitudes c_0..c_cutoff of the state to teleport.
struct TargetCoeffs {
  std::vector<Complex> coeffs;
  std::string label;

  int cutoff() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  /// c_m, or zero outside the truncation window.
  Complex at(long m) const noexcept {
    return (m < 0 || m >= static_cast<long>(coeffs.size()))
               ? Complex{}
               : coeffs[static_cast<std::size_t>(m)];
  }
  double norm_squared() const noexcept;
};

/// d_{n-N} = exp(-i pi/2 (n - N - m)) D^N_{n-N, m}(beta), built from the
/// stable rotation column.
ResourceCoeffs resource_coeffs(const ResourceParams& params);

/// Same, reusing a generator whose twice_j equals params.total().
ResourceCoeffs resource_coeffs(const ResourceParams& params,
                               const RotationGenerator& generator);

inline constexpr double kTruncationTolerance = 1e-12;

// Target builders. The truncated vectors are renormalized; builders throw
// Error{Truncation} when the discarded tail carries `tail_tolerance` or more
// of the probability. Small dense checks pass a looser tolerance to work on
// deliberately short windows.
TargetCoeffs cat_coeffs(Complex alpha, int cutoff,
                        double tail_tolerance = kTruncationTolerance);
TargetCoeffs coherent_coeffs(Complex alpha, int cutoff,
                             double tail_tolerance = kTruncationTolerance);
TargetCoeffs fock_coeffs(int k, int cutoff);

enum class TargetKind { Coherent, EvenCat };

/// Smallest cutoff whose discarded tail is below kTruncationTolerance.
int minimal_cutoff(double abs_alpha, TargetKind kind);

}  // namespace fockport
