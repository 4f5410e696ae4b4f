#pragma once

#include <vector>

#include "fockport/grid.hpp"
#include "fockport/output_state.hpp"
#include "fockport/states.hpp"

namespace fockport {

/// Outcomes with probability at or below this are treated as never occurring:
/// F(q) is left undefined and the outcome carries no weight.
inline constexpr double kNegligibleOutcome = 1e-15;

/// P(q) = sum_n |c_{q-n}|^2 |d_{n-N}|^2, n = 0..min(q, 2N).
double number_sum_prob(const TargetCoeffs& target,
                       const ResourceCoeffs& resource, int q);

/// P(q) and F(q) tabulated over q = q_min..q_max = 0..cutoff + 2N.
struct OutcomeDistribution {
  int q_min = 0;
  int q_max = -1;
  std::vector<double> p;
  std::vector<double> f;  // NaN where p <= kNegligibleOutcome

  bool defined(int q) const;
  double probability_sum() const;
};

OutcomeDistribution outcome_distribution(const TargetCoeffs& target,
                                         const ResourceCoeffs& resource);

/// F(q) through the factored form |sum_n |c_{q-n}|^2 d_{n-N}|^2 / P(q).
/// Throws Error{UndefinedOutcome} when P(q) is exactly zero.
double fidelity_given_q(const TargetCoeffs& target,
                        const ResourceCoeffs& resource, int q);

/// F(q) as the literal double sum over (n, n'). The imaginary part is pure
/// round-off and is returned for inspection.
Complex fidelity_given_q_double_sum(const TargetCoeffs& target,
                                    const ResourceCoeffs& resource, int q);

/// Bob's state after the amplification |2N-n> -> |q-n> and the phase shift
/// exp(2i(n - n') phi_minus). The shift undoes the measurement phase, so the
/// result does not depend on phi_minus.
OutputState output_state(const TargetCoeffs& target,
                         const ResourceCoeffs& resource, int q,
                         double phi_minus);

/// sum_q P(q) F(q) accumulated over outcome_distribution in increasing q.
double average_fidelity(const TargetCoeffs& target,
                        const ResourceCoeffs& resource);

/// Average fidelity as the quadruple-index sum
/// sum_q sum_{n,n'} |c_{q-n}|^2 |c_{q-n'}|^2 d_{n-N} d*_{n'-N}.
Complex average_fidelity_double_sum(const TargetCoeffs& target,
                                    const ResourceCoeffs& resource);

/// Average fidelity with no entanglement: the resource degenerates to the
/// product state |n_in>|m_in> and every outcome reproduces one target
/// component, giving sum_m |c_m|^4.
double classical_baseline(const TargetCoeffs& target,
                          const ResourceParams& params);

struct SweepOptions {
  /// Worker count; 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Average fidelity over (m, beta) at fixed total. Cell (m, beta) uses inputs
/// (N + m, N - m). Results do not depend on the worker count.
FidelityGrid fidelity_sweep(const TargetCoeffs& target, int total,
                            const std::vector<double>& beta_axis,
                            const std::vector<int>& twice_m_axis,
                            SweepOptions options = {});

}  // namespace fockport
