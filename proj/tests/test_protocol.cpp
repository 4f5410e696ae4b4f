#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "fockport/error.hpp"
#include "fockport/oracle.hpp"
#include "fockport/protocol.hpp"

using namespace fockport;
using std::numbers::pi;

namespace {

// sum_m |c_m|^4 with c from the recursion c_m = c_{m-1} alpha / sqrt(m),
// even entries only, normalized.
double cat_fourth_moment(double alpha, int cutoff) {
  std::vector<double> c{1.0};
  for (int m = 1; m <= cutoff; ++m) c.push_back(c.back() * alpha / std::sqrt(m));
  double norm = 0.0;
  for (int m = 0; m <= cutoff; m += 2) norm += c[m] * c[m];
  double sum = 0.0;
  for (int m = 0; m <= cutoff; m += 2) {
    const double w = c[m] * c[m] / norm;
    sum += w * w;
  }
  return sum;
}

TargetCoeffs random_target(std::mt19937& rng, int cutoff) {
  std::normal_distribution<double> g;
  TargetCoeffs t{std::vector<Complex>(cutoff + 1), "random"};
  for (auto& c : t.coeffs) c = {g(rng), g(rng)};
  const double n = std::sqrt(t.norm_squared());
  for (auto& c : t.coeffs) c /= n;
  return t;
}

}  // namespace

TEST_CASE("number_sum_prob examples") {
  SUBCASE("Fock target picks out one resource amplitude") {
    const auto r = resource_coeffs({2, 1, 1.1});
    const auto t = fock_coeffs(2, 4);
    for (int q = 0; q <= 10; ++q) {
      const int n = q - 2;
      const double expected = (n >= 0 && n <= 3) ? std::norm(r.coeffs[n]) : 0.0;
      CHECK(number_sum_prob(t, r, q) == doctest::Approx(expected).epsilon(1e-15));
    }
  }
  SUBCASE("delta resource shifts the target distribution") {
    const auto r = resource_coeffs({3, 5, 0.0});
    const auto t = cat_coeffs(3.0, 60);
    for (int q = 0; q <= 70; ++q) {
      CHECK(number_sum_prob(t, r, q) == doctest::Approx(std::norm(t.at(q - 3))).epsilon(1e-15));
    }
  }
  SUBCASE("Hong-Ou-Mandel resource with |2>") {
    const auto r = resource_coeffs({1, 1, pi / 2});
    const auto t = fock_coeffs(2, 3);
    CHECK(number_sum_prob(t, r, 2) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(number_sum_prob(t, r, 3) < 1e-28);
    CHECK(number_sum_prob(t, r, 4) == doctest::Approx(0.5).epsilon(1e-14));
  }
  CHECK_THROWS_AS((number_sum_prob(fock_coeffs(0, 0), resource_coeffs({1, 1, 0.3}), -1)), Error);
}

TEST_CASE("outcome_distribution") {
  SUBCASE("Fock targets teleport perfectly on every defined outcome") {
    const auto d = outcome_distribution(fock_coeffs(3, 5), resource_coeffs({4, 2, 0.9}));
    CHECK(d.q_max == 5 + 6);
    int defined = 0;
    for (int q = d.q_min; q <= d.q_max; ++q) {
      if (!d.defined(q)) continue;
      ++defined;
      CHECK(d.f[q] == doctest::Approx(1.0).epsilon(1e-14));
    }
    CHECK(defined > 0);
  }
  SUBCASE("normalization") {
    const auto d = outcome_distribution(cat_coeffs(3.0, 60),
                                        resource_coeffs({10, 10, pi / 2}));
    CHECK(std::abs(d.probability_sum() - 1.0) < 1e-10);
    for (int q = d.q_min; q <= d.q_max; ++q) {
      CHECK(d.p[q] >= 0.0);
      if (d.defined(q)) CHECK(d.f[q] <= 1.0 + 1e-12);
    }
  }
  SUBCASE("average fidelity is the p-weighted sum, bit for bit") {
    const auto t = cat_coeffs(3.0, 60);
    const auto r = resource_coeffs({50, 50, pi / 2});
    const auto d = outcome_distribution(t, r);
    double sum = 0.0;
    for (std::size_t i = 0; i < d.p.size(); ++i) {
      if (!std::isnan(d.f[i])) sum += d.p[i] * d.f[i];
    }
    CHECK(sum == average_fidelity(t, r));
  }
}

TEST_CASE("fidelity_given_q") {
  const auto r = resource_coeffs({2, 3, 0.7});
  SUBCASE("Fock target") {
    const auto t = fock_coeffs(1, 2);
    for (int q = 1; q <= 6; ++q) CHECK(fidelity_given_q(t, r, q) == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("delta resource returns the component weight") {
    const auto r0 = resource_coeffs({4, 4, 0.0});
    const auto t = cat_coeffs(3.0, 60);
    for (int q = 4; q <= 64; q += 2) {
      CHECK(fidelity_given_q(t, r0, q) == doctest::Approx(std::norm(t.at(q - 4))).epsilon(1e-13));
    }
  }
  SUBCASE("cat target through (2,2,pi/2) against the dense oracle") {
    const ResourceParams p{2, 2, pi / 2};
    const auto r2 = resource_coeffs(p);
    // The dense oracle is capped at cutoff 8, so both sides use the same
    // short window of the cat.
    const auto small = cat_coeffs(3.0, 8, 1.0);
    const auto bf = oracle::protocol_brute_force(small, p, 6, 0.4);
    CHECK(std::abs(fidelity_given_q(small, r2, 6) - bf.fidelity) < 1e-10);
  }
  SUBCASE("undefined outcome") {
    const auto t = fock_coeffs(0, 0);
    const auto r1 = resource_coeffs({1, 1, 0.0});
    CHECK_THROWS_AS(fidelity_given_q(t, r1, 0), Error);
    try {
      fidelity_given_q(t, r1, 7);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::UndefinedOutcome);
    }
  }
}

TEST_CASE("factored form equals the double sum on random instances") {
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> beta(0.0, pi);
  std::uniform_int_distribution<int> small(0, 10);
  double worst = 0.0, worst_imag = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const int total = small(rng);
    std::uniform_int_distribution<int> split(0, total);
    const int n_in = split(rng);
    const auto t = random_target(rng, small(rng));
    const auto r = resource_coeffs({n_in, total - n_in, beta(rng)});
    for (int q = 0; q <= t.cutoff() + total; ++q) {
      const double p = number_sum_prob(t, r, q);
      if (p == 0.0) continue;
      const Complex dbl = fidelity_given_q_double_sum(t, r, q);
      worst = std::max(worst, std::abs(fidelity_given_q(t, r, q) * p - dbl.real() * p));
      worst_imag = std::max(worst_imag, std::abs(dbl.imag()));
    }
    const Complex avg = average_fidelity_double_sum(t, r);
    CHECK(std::abs(avg.real() - average_fidelity(t, r)) < 1e-12);
    CHECK(std::abs(avg.imag()) < 1e-12);
  }
  CHECK(worst < 1e-12);
  CHECK(worst_imag < 1e-12);
}

TEST_CASE("output_state") {
  SUBCASE("Fock target collapses to a pure projector") {
    const auto r = resource_coeffs({1, 1, pi / 2});
    const auto rho = output_state(fock_coeffs(2, 3), r, 4, 0.3);
    for (int i = 0; i < rho.dimension(); ++i) {
      for (int j = 0; j < rho.dimension(); ++j) {
        const bool at_k = rho.fock_index(i) == 2 && rho.fock_index(j) == 2;
        CHECK(std::abs(rho.matrix(i, j) - Complex(at_k ? 1.0 : 0.0)) < 1e-14);
      }
    }
  }
  SUBCASE("trace, hermiticity, positivity, phase independence") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
      const auto t = random_target(rng, 6);
      const auto r = resource_coeffs({3, 2, 0.3 * (trial + 1)});
      for (int q = 0; q <= 11; ++q) {
        if (number_sum_prob(t, r, q) == 0.0) continue;
        const auto rho = output_state(t, r, q, 0.0);
        CHECK(std::abs(rho.trace() - Complex(1.0)) < 1e-12);
        CHECK(rho.hermiticity_defect() < 1e-12);
        CHECK(rho.min_eigenvalue() >= -1e-10);
        for (double phi : {0.7, pi / 2, 3.0}) {
          const auto other = output_state(t, r, q, phi);
          CHECK((other.matrix - rho.matrix).cwiseAbs().maxCoeff() < 1e-14);
        }
      }
    }
  }
  SUBCASE("expectation in the target reproduces F(q)") {
    const auto t = cat_coeffs(1.0, 20);
    const auto r = resource_coeffs({1, 1, pi / 2});
    const auto rho = output_state(t, r, 2, 0.0);
    CHECK(rho.fidelity_with(t) == doctest::Approx(fidelity_given_q(t, r, 2)).epsilon(1e-14));
  }
}

TEST_CASE("average_fidelity and classical_baseline") {
  SUBCASE("Fock targets") {
    for (int k = 0; k <= 4; ++k) {
      const auto t = fock_coeffs(k, 6);
      CHECK(std::abs(average_fidelity(t, resource_coeffs({3, 7, 1.3})) - 1.0) < 1e-12);
      CHECK(classical_baseline(t, {3, 7, 1.3}) == 1.0);
    }
  }
  SUBCASE("delta resource equals the fourth moment of the cat") {
    const auto t = cat_coeffs(3.0, 60);
    const double expected = cat_fourth_moment(3.0, 60);
    CHECK(expected == doctest::Approx(0.18941258424921123).epsilon(1e-12));
    CHECK(classical_baseline(t, {10, 10, 0.0}) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(std::abs(average_fidelity(t, resource_coeffs({10, 10, 0.0})) -
                   classical_baseline(t, {10, 10, 0.0})) < 1e-9);
    CHECK(std::abs(average_fidelity(t, resource_coeffs({10, 10, pi})) -
                   classical_baseline(t, {10, 10, pi})) < 1e-9);
  }
  SUBCASE("entanglement beats the classical level at 50:50") {
    const auto t = cat_coeffs(3.0, 60);
    const double f = average_fidelity(t, resource_coeffs({50, 50, pi / 2}));
    CHECK(f > classical_baseline(t, {50, 50, pi / 2}) + 0.1);
    CHECK(f <= 1.0 + 1e-12);
  }
}

TEST_CASE("fidelity_sweep") {
  const auto t = cat_coeffs(2.0, 40);
  const auto betas = interior_beta_axis(9);
  const std::vector<int> ms{0, 1, 2, 4, 20};
  const auto grid = fidelity_sweep(t, 20, betas, ms, {2});
  CHECK(grid.width() == 9);
  CHECK(grid.height() == 5);
  // m = 1/2 is incompatible with an even total; m = 10 is the one-port limit.
  CHECK(grid.invalid_count() == 9);
  for (std::size_t b = 0; b < 9; ++b) CHECK_FALSE(grid.valid(1, b));
  for (std::size_t i_m : {0u, 2u, 3u, 4u}) {
    for (std::size_t b = 0; b < 9; ++b) {
      const double v = grid.at(i_m, b);
      CHECK(v >= 0.0);
      CHECK(v <= 1.0 + 1e-12);
      const auto p = ResourceParams::from_total(20, ms[i_m], betas[b]);
      CHECK(v == average_fidelity(t, resource_coeffs(p)));
    }
  }
  const auto serial = fidelity_sweep(t, 20, betas, ms, {1});
  for (std::size_t i = 0; i < grid.values.size(); ++i) {
    if (std::isnan(grid.values[i])) {
      CHECK(std::isnan(serial.values[i]));
    } else {
      CHECK(grid.values[i] == serial.values[i]);
    }
  }
  CHECK_THROWS_AS((fidelity_sweep(t, 20, {4.0}, ms)), Error);
}
