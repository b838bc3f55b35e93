#include <catch2/catch_amalgamated.hpp>

#include <gdof/hk_scheme.hpp>

#include <complex>
#include <stdexcept>

using gdof::ExponentProfile;
using gdof::Rational;
using gdof::sim::CMatrix;

namespace {

const ExponentProfile kExpA{1, Rational(3, 5), Rational(3, 5), 1};

double max_eigenvalue(const CMatrix& a) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es((a + a.adjoint()) / 2.0);
  return es.eigenvalues().maxCoeff();
}

}  // namespace

TEST_CASE("scalar covariances by direct substitution") {
  CMatrix cross(1, 1);
  cross(0, 0) = 1.0;
  const auto cov = gdof::sim::hk_covariances(cross, 3.0, 1);
  REQUIRE(std::real(cov.private_cov(0, 0)) == Catch::Approx(0.25).margin(1e-14));
  REQUIRE(std::real(cov.common_cov(0, 0)) == Catch::Approx(0.75).margin(1e-14));
}

TEST_CASE("user selector checks its argument") {
  const auto ch = gdof::sim::sample_channel({2, 2, 2, 2}, 3);
  REQUIRE_THROWS_AS(gdof::sim::hk_covariances(ch, kExpA, 100.0, 0), std::invalid_argument);
  REQUIRE_THROWS_AS(gdof::sim::beam_decomposition(ch, kExpA, 100.0, 3),
                    std::invalid_argument);
}

TEST_CASE("power constraint and noise-floor containment") {
  for (int s = 0; s < 50; ++s) {
    const auto ch = gdof::sim::sample_channel({3, 3, 2, 2}, 900 + s);
    for (int user : {1, 2}) {
      const auto cov = gdof::sim::hk_covariances(ch, kExpA, 1e6, user);
      REQUIRE(std::abs(std::real((cov.private_cov + cov.common_cov).trace()) - 1.0) <
              1e-12);
      REQUIRE(std::abs(std::imag(cov.private_cov.trace())) < 1e-12);

      // interference from the private stream stays at or below the noise
      const CMatrix& cross = user == 1 ? ch.h12 : ch.h21;
      const double p_cross =
          gdof::sim::rho_power(1e6, user == 1 ? kExpA.cross12 : kExpA.cross21);
      const int tx = static_cast<int>(cross.cols());
      const CMatrix at_other = p_cross * cross * cov.private_cov * cross.adjoint();
      REQUIRE(max_eigenvalue(at_other) <= 1.0 / tx + 1e-12);
    }
  }
}

TEST_CASE("beams reconstruct the covariances and hit the null space") {
  const auto ch = gdof::sim::sample_channel({3, 3, 2, 2}, 11);
  const auto cov = gdof::sim::hk_covariances(ch, kExpA, 1e6, 1);
  const auto beams = gdof::sim::beam_decomposition(ch, kExpA, 1e6, 1);

  const int tx = 3;
  REQUIRE(beams.directions.rows() == tx);
  REQUIRE(beams.private_powers.size() == 3);
  REQUIRE(beams.common_powers.size() == 2);

  // orthonormal directions
  const CMatrix gram = beams.directions.adjoint() * beams.directions;
  REQUIRE((gram - CMatrix::Identity(tx, tx)).norm() < 1e-10);

  CMatrix priv = CMatrix::Zero(tx, tx);
  for (int k = 0; k < tx; ++k) {
    priv += beams.private_powers[k] * beams.directions.col(k) *
            beams.directions.col(k).adjoint();
  }
  REQUIRE((priv - cov.private_cov).norm() < 1e-10);

  CMatrix common = CMatrix::Zero(tx, tx);
  for (size_t k = 0; k < beams.common_powers.size(); ++k) {
    common += beams.common_powers[k] * beams.directions.col(k) *
              beams.directions.col(k).adjoint();
  }
  REQUIRE((common - cov.common_cov).norm() < 1e-10);

  // one spare transmit antenna gives exactly one invisible beam
  REQUIRE((ch.h12 * beams.directions.col(2)).norm() <= 1e-9);
  REQUIRE((ch.h12 * beams.directions.col(0)).norm() > 1e-3);
}

TEST_CASE("no null beams without spare antennas") {
  const auto ch = gdof::sim::sample_channel({2, 3, 2, 3}, 23);
  const auto beams = gdof::sim::beam_decomposition(ch, kExpA, 1e6, 1);
  REQUIRE(beams.common_powers.size() == 2);
  for (int k = 0; k < 2; ++k) REQUIRE((ch.h12 * beams.directions.col(k)).norm() > 1e-3);
}

TEST_CASE("outer bounds on the all-ones scalar channel") {
  gdof::sim::ChannelInstance ch;
  ch.h11 = ch.h12 = ch.h21 = ch.h22 = CMatrix::Ones(1, 1);
  const ExponentProfile unit{1, 1, 1, 1};
  const auto b = gdof::sim::outer_bound_values(ch, unit, 1.0);
  REQUIRE(b[0] == Catch::Approx(1.0).margin(1e-12));
  REQUIRE(b[1] == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("outer bounds grow with power and dominate the achievable side") {
  const auto ch = gdof::sim::sample_channel({3, 3, 2, 2}, 77);
  const auto lo = gdof::sim::outer_bound_values(ch, kExpA, 1e4);
  const auto mid = gdof::sim::outer_bound_values(ch, kExpA, 1e6);
  const auto hi = gdof::sim::outer_bound_values(ch, kExpA, 1e8);
  for (size_t k = 0; k < 7; ++k) {
    REQUIRE(lo[k] >= 0.0);
    REQUIRE(lo[k] <= mid[k]);
    REQUIRE(mid[k] <= hi[k]);
  }

  const auto inner = gdof::sim::achievable_bound_values(ch, kExpA, 1e6);
  for (size_t k = 0; k < 7; ++k) REQUIRE(inner[k] <= mid[k]);
}

TEST_CASE("achievable penalties enter with the stated multiplicity") {
  const auto ch = gdof::sim::sample_channel({2, 2, 2, 2}, 5);
  const auto outer = gdof::sim::outer_bound_values(ch, kExpA, 1e8);
  const auto same = gdof::sim::achievable_bound_values(ch, kExpA, 1e8, 0.0, 0.0);
  for (size_t k = 0; k < 7; ++k) REQUIRE(same[k] == outer[k]);

  const auto shifted = gdof::sim::achievable_bound_values(ch, kExpA, 1e8, 3.0, 5.0);
  const double expected[7] = {3, 5, 8, 8, 8, 11, 13};
  for (size_t k = 0; k < 7; ++k)
    REQUIRE(outer[k] - shifted[k] == Catch::Approx(expected[k]).margin(1e-9));

  REQUIRE_THROWS_AS(gdof::sim::achievable_bound_values(ch, kExpA, 1e8, -1.0, 0.0),
                    std::invalid_argument);
}

TEST_CASE("interference-as-noise rates on scalar channels") {
  gdof::sim::ChannelInstance ch;
  ch.h11 = ch.h12 = ch.h21 = ch.h22 = CMatrix::Ones(1, 1);
  const auto [r1, r2] = gdof::sim::tin_rates(ch, {1, 0, 0, 1}, 3.0);
  REQUIRE(r1 == Catch::Approx(std::log2(1.0 + 1.5)).margin(1e-12));
  REQUIRE(r2 == Catch::Approx(std::log2(1.0 + 1.5)).margin(1e-12));

  // removing the interferer recovers the single-user rate
  ch.h21 = CMatrix::Zero(1, 1);
  const auto [single, other] = gdof::sim::tin_rates(ch, {1, 0, 0, 1}, 3.0);
  REQUIRE(single == Catch::Approx(2.0).margin(1e-12));
  REQUIRE(other == Catch::Approx(std::log2(2.5)).margin(1e-12));
}
