#include <cmath>
#include <numbers>

#include <unsupported/Eigen/MatrixFunctions>

#include "doctest.h"
#include "fockport/error.hpp"
#include "fockport/oracle.hpp"
#include "fockport/protocol.hpp"

using namespace fockport;
using std::numbers::pi;

TEST_CASE("SectorHamiltonian structure") {
  const auto h = oracle::SectorHamiltonian::for_total(4);
  CHECK(h.dimension() == 5);
  REQUIRE(h.offdiag.size() == 4);
  CHECK(h.offdiag[0] == doctest::Approx(0.5 * std::sqrt(4.0)));
  CHECK(h.offdiag[1] == doctest::Approx(0.5 * std::sqrt(6.0)));
  const auto m = h.dense();
  CHECK((m - m.transpose()).cwiseAbs().maxCoeff() == 0.0);
  CHECK(m.diagonal().cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("sector_unitary_column examples") {
  for (double b : {0.0, 0.3, 1.7, pi}) {
    const auto col = oracle::sector_unitary_column({1, 0, b});
    CHECK(std::abs(col[0] - Complex(0.0, std::sin(b / 2))) < 1e-14);
    CHECK(std::abs(col[1] - Complex(std::cos(b / 2), 0.0)) < 1e-14);
  }
  const auto id = oracle::sector_unitary_column({3, 2, 0.0});
  for (int n = 0; n <= 5; ++n) {
    CHECK(std::abs(id[n] - Complex(n == 3 ? 1.0 : 0.0)) < 1e-14);
  }
  const auto hom = oracle::sector_unitary_column({1, 1, pi / 2});
  CHECK(std::abs(hom[1]) < 1e-14);
}

TEST_CASE("sector unitary agrees with a Pade matrix exponential") {
  for (int total : {1, 2, 5, 12}) {
    const auto h = oracle::SectorHamiltonian::for_total(total).dense();
    for (double b : {0.2, 1.4, 3.0}) {
      const Eigen::MatrixXcd pade = (Complex(0.0, b) * h.cast<Complex>()).exp();
      CHECK((pade - oracle::sector_unitary(total, b)).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("sector unitary is unitary up to total 60") {
  for (int total : {0, 1, 7, 20, 41, 60}) {
    for (double b : {0.1, pi / 2, 3.0}) {
      const auto u = oracle::sector_unitary(total, b);
      const auto id = Eigen::MatrixXcd::Identity(total + 1, total + 1);
      CHECK((u.adjoint() * u - id).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("verify_resource") {
  const auto a = oracle::verify_resource({1, 0, pi / 2});
  CHECK(a.pass);
  CHECK(a.overlap_abs == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(oracle::verify_resource({1, 1, pi / 2}).pass);
  const auto big = oracle::verify_resource({30, 30, 1.0});
  CHECK(big.pass);
  CHECK(1.0 - big.overlap_abs < 1e-10);
  CHECK(big.max_deviation < 1e-10);
  CHECK_THROWS_AS((oracle::verify_resource({40, 30, 1.0})), Error);
  // An absurdly strict tolerance is reported, not thrown.
  const auto strict = oracle::verify_resource({5, 5, 1.0}, -1.0);
  CHECK_FALSE(strict.pass);
}

TEST_CASE("protocol_brute_force examples") {
  SUBCASE("Fock target through the HOM resource") {
    for (int k = 0; k <= 3; ++k) {
      const auto bf = oracle::protocol_brute_force(fock_coeffs(k, 3), {1, 1, pi / 2}, k + 2, 0.3);
      for (int i = 0; i <= k + 2; ++i) {
        for (int j = 0; j <= k + 2; ++j) {
          const double expected = (i == k && j == k) ? 1.0 : 0.0;
          CHECK(std::abs(bf.rho_fock(i, j) - Complex(expected)) < 1e-14);
        }
      }
    }
  }
  SUBCASE("cat alpha=1 cutoff 6 through (2,2,1.3)") {
    const auto t = cat_coeffs(1.0, 6, 1.0);
    const ResourceParams p{2, 2, 1.3};
    const auto bf = oracle::protocol_brute_force(t, p, 4, 0.7);
    CHECK(std::abs(bf.rho_fock.trace() - Complex(1.0)) < 1e-12);
    CHECK(std::abs(bf.fidelity - fidelity_given_q(t, resource_coeffs(p), 4)) < 1e-10);
    CHECK(std::abs(bf.p_q - number_sum_prob(t, resource_coeffs(p), 4)) < 1e-12);
  }
  SUBCASE("p_q carries no phase dependence") {
    const auto t = coherent_coeffs(Complex(0.6, 0.4), 8, 1.0);
    const ResourceParams p{3, 4, 2.1};
    const double base = oracle::protocol_brute_force(t, p, 5, 0.0).p_q;
    for (double phi : {0.7, pi / 2, 3.0}) {
      CHECK(std::abs(oracle::protocol_brute_force(t, p, 5, phi).p_q - base) < 1e-12);
    }
  }
  SUBCASE("brute-force states are physical") {
    const auto t = cat_coeffs(1.0, 6, 1.0);
    for (int q = 0; q <= 10; ++q) {
      const auto bf = oracle::protocol_brute_force(t, {3, 1, 0.9}, q, 1.1);
      CHECK(bf.rho_out.hermiticity_defect() < 1e-12);
      CHECK(bf.rho_out.min_eigenvalue() >= -1e-10);
    }
  }
  SUBCASE("size caps") {
    CHECK_THROWS_AS((oracle::protocol_brute_force(fock_coeffs(0, 9), {1, 1, 0.2}, 1, 0.0)), Error);
    CHECK_THROWS_AS((oracle::protocol_brute_force(fock_coeffs(0, 2), {5, 4, 0.2}, 1, 0.0)), Error);
    try {
      oracle::protocol_brute_force(fock_coeffs(0, 2), {5, 4, 0.2}, 1, 0.0);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Size);
    }
  }
}
