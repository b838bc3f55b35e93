#pragma once

#include "gdof/channel.hpp"
#include "gdof/hk_scheme.hpp"
#include "gdof/mac_bounds.hpp"
#include "gdof/region.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace gdof::verify {

struct SlopeReport {
  std::string label;
  double predicted = 0;
  double estimated = 0;
  double abs_error = 0;
  bool pass = false;
};

struct VerifyOptions {
  double rho_lo = 1e6;
  double rho_hi = 1e9;
  int trials = 5;
  double tolerance = 0.05;
  uint64_t seed = 1;
};

/// Finite-difference slope of a log-det expression against log2(rho). The
/// piecewise-linear predictions are exact only in the rho -> infinity limit;
/// at these operating points the O(1) terms move the quotient by well under
/// the default tolerance.
[[nodiscard]] inline double slope_estimate(const std::function<double(double)>& value_at,
                                           double rho_lo, double rho_hi) {
  return (value_at(rho_hi) - value_at(rho_lo)) /
         (std::log2(rho_hi) - std::log2(rho_lo));
}

namespace detail {

[[nodiscard]] inline SlopeReport make_report(std::string label, double predicted,
                                             double estimated, double tolerance) {
  SlopeReport r;
  r.label = std::move(label);
  r.predicted = predicted;
  r.estimated = estimated;
  r.abs_error = std::abs(predicted - estimated);
  r.pass = r.abs_error <= tolerance;
  return r;
}

[[nodiscard]] inline double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const size_t n = v.size();
  return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

}  // namespace detail

/// Check the two-group receive-space fill against the channel it models:
/// random full matrices of the given widths into `dims` receive dimensions,
/// one report per trial.
[[nodiscard]] inline std::vector<SlopeReport> verify_two_term_bound(
    int dims, const WeightedTerm& a, const WeightedTerm& b,
    const VerifyOptions& opt = {}) {
  const double predicted = to_double(two_group_fill(dims, a, b));
  const double ea = to_double(a.exponent), eb = to_double(b.exponent);
  std::vector<SlopeReport> out;
  for (int t = 0; t < opt.trials; ++t) {
    sim::GaussianSource src(opt.seed ^ static_cast<uint64_t>(t));
    const sim::CMatrix h1 = sim::detail::sample_matrix(dims, a.width, src);
    const sim::CMatrix h2 = sim::detail::sample_matrix(dims, b.width, src);
    const auto value = [&](double rho) {
      return sim::logdet_identity_plus(std::pow(rho, ea) * h1 * h1.adjoint() +
                                       std::pow(rho, eb) * h2 * h2.adjoint());
    };
    out.push_back(detail::make_report("trial " + std::to_string(t), predicted,
                                      slope_estimate(value, opt.rho_lo, opt.rho_hi),
                                      opt.tolerance));
  }
  return out;
}

/// Three-group variant of the same check.
[[nodiscard]] inline std::vector<SlopeReport> verify_three_term_bound(
    int dims, const WeightedTerm& a, const WeightedTerm& b, const WeightedTerm& c,
    const VerifyOptions& opt = {}) {
  const double predicted = to_double(three_group_fill(dims, a, b, c));
  const double ea = to_double(a.exponent), eb = to_double(b.exponent),
               ec = to_double(c.exponent);
  std::vector<SlopeReport> out;
  for (int t = 0; t < opt.trials; ++t) {
    sim::GaussianSource src(opt.seed ^ static_cast<uint64_t>(t));
    const sim::CMatrix h1 = sim::detail::sample_matrix(dims, a.width, src);
    const sim::CMatrix h2 = sim::detail::sample_matrix(dims, b.width, src);
    const sim::CMatrix h3 = sim::detail::sample_matrix(dims, c.width, src);
    const auto value = [&](double rho) {
      return sim::logdet_identity_plus(std::pow(rho, ea) * h1 * h1.adjoint() +
                                       std::pow(rho, eb) * h2 * h2.adjoint() +
                                       std::pow(rho, ec) * h3 * h3.adjoint());
    };
    out.push_back(detail::make_report("trial " + std::to_string(t), predicted,
                                      slope_estimate(value, opt.rho_lo, opt.rho_hi),
                                      opt.tolerance));
  }
  return out;
}

/// Check all seven region bounds against the finite-SNR log-det outer
/// expressions they summarize: for each bound, the median slope across
/// channel draws is compared to the half-space right-hand side. Passing the
/// alternative-form region option here is how the two candidate forms of the
/// last bound are told apart empirically.
[[nodiscard]] inline std::vector<SlopeReport> verify_region_bounds(
    const AntennaConfig& cfg, const ExponentProfile& exp,
    const VerifyOptions& opt = {}, const RegionOptions& region_opt = {}) {
  const auto region = gdof_region(cfg, exp, region_opt);
  static const char* kLabels[7] = {
      "d1",        "d2",          "d1+a22.d2 (A)", "d1+a22.d2 (B)",
      "d1+a22.d2 (C)", "2d1+a22.d2", "d1+2a22.d2"};

  std::vector<std::vector<double>> slopes(7);
  const double denom = std::log2(opt.rho_hi) - std::log2(opt.rho_lo);
  for (int t = 0; t < opt.trials; ++t) {
    const auto ch = sim::sample_channel(cfg, opt.seed ^ static_cast<uint64_t>(t));
    const auto lo = sim::outer_bound_values(ch, exp, opt.rho_lo);
    const auto hi = sim::outer_bound_values(ch, exp, opt.rho_hi);
    for (size_t k = 0; k < 7; ++k) slopes[k].push_back((hi[k] - lo[k]) / denom);
  }
  std::vector<SlopeReport> out;
  for (size_t k = 0; k < 7; ++k) {
    // Half-space right-hand sides live in per-user normalized units while the
    // log-det slopes are taken against the nominal SNR, so the second
    // single-user bound picks up the direct-link exponent of user 2.
    Rational predicted = region.bounds[k].rhs;
    if (k == 1) predicted = predicted * exp.direct2;
    out.push_back(detail::make_report(kLabels[k], to_double(predicted),
                                      detail::median(slopes[k]), opt.tolerance));
  }
  return out;
}

}  // namespace gdof::verify
