#include <catch2/catch_amalgamated.hpp>

#include <gdof/channel.hpp>

#include <cmath>
#include <complex>

using gdof::sim::CMatrix;

TEST_CASE("sampling is deterministic in the seed") {
  const gdof::AntennaConfig cfg{3, 3, 2, 2};
  const auto a = gdof::sim::sample_channel(cfg, 42);
  const auto b = gdof::sim::sample_channel(cfg, 42);
  REQUIRE((a.h11 - b.h11).norm() == 0.0);
  REQUIRE((a.h12 - b.h12).norm() == 0.0);
  REQUIRE((a.h21 - b.h21).norm() == 0.0);
  REQUIRE((a.h22 - b.h22).norm() == 0.0);

  const auto c = gdof::sim::sample_channel(cfg, 43);
  REQUIRE((a.h11 - c.h11).norm() > 0.0);
}

TEST_CASE("matrix orientations follow the receive-by-transmit convention") {
  const auto ch = gdof::sim::sample_channel({3, 3, 2, 2}, 7);
  REQUIRE(ch.h11.rows() == 3);
  REQUIRE(ch.h11.cols() == 3);
  // the link from transmitter 1 to receiver 2
  REQUIRE(ch.h12.rows() == 2);
  REQUIRE(ch.h12.cols() == 3);
  REQUIRE(ch.h21.rows() == 3);
  REQUIRE(ch.h21.cols() == 2);
  REQUIRE(ch.h22.rows() == 2);
  REQUIRE(ch.h22.cols() == 2);
}

TEST_CASE("entries look standard circularly symmetric") {
  double power = 0, mean_re = 0, mean_im = 0;
  int count = 0;
  for (int s = 0; s < 1000; ++s) {
    const auto ch = gdof::sim::sample_channel({2, 2, 2, 2}, 1000 + s);
    for (const CMatrix* m : {&ch.h11, &ch.h12, &ch.h21, &ch.h22}) {
      for (int r = 0; r < m->rows(); ++r) {
        for (int c = 0; c < m->cols(); ++c) {
          const std::complex<double> z = (*m)(r, c);
          power += std::norm(z);
          mean_re += z.real();
          mean_im += z.imag();
          ++count;
        }
      }
    }
  }
  REQUIRE(count == 16000);
  REQUIRE(std::abs(power / count - 1.0) < 0.1);
  REQUIRE(std::abs(mean_re / count) < 0.05);
  REQUIRE(std::abs(mean_im / count) < 0.05);
}

TEST_CASE("every sampled matrix is numerically full rank") {
  for (int s = 0; s < 25; ++s) {
    const auto ch = gdof::sim::sample_channel({4, 2, 1, 3}, 50 + s);
    for (const CMatrix* m : {&ch.h11, &ch.h12, &ch.h21, &ch.h22}) {
      Eigen::JacobiSVD<CMatrix> svd(*m);
      REQUIRE(svd.singularValues().minCoeff() > 1e-9);
    }
  }
}

TEST_CASE("scalar source has unit variance and replays") {
  gdof::sim::GaussianSource src(5);
  double sum = 0, sum_sq = 0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const double x = src.next();
    sum += x;
    sum_sq += x * x;
  }
  REQUIRE(std::abs(sum / n) < 0.03);
  REQUIRE(std::abs(sum_sq / n - 1.0) < 0.05);

  gdof::sim::GaussianSource again(5);
  gdof::sim::GaussianSource same(5);
  for (int i = 0; i < 100; ++i) REQUIRE(again.next() == same.next());
}

TEST_CASE("log-det of shifted identity") {
  CMatrix one = CMatrix::Identity(1, 1);
  REQUIRE(gdof::sim::logdet_identity_plus(one) == Catch::Approx(1.0).margin(1e-12));

  CMatrix diag = CMatrix::Zero(2, 2);
  diag(0, 0) = 1.0;
  diag(1, 1) = 3.0;
  REQUIRE(gdof::sim::logdet_identity_plus(diag) == Catch::Approx(3.0).margin(1e-12));

  CMatrix zero = CMatrix::Zero(3, 3);
  REQUIRE(gdof::sim::logdet_identity_plus(zero) == Catch::Approx(0.0).margin(1e-12));
}
