#pragma once

#include "gdof/mac_bounds.hpp"
#include "gdof/polytope.hpp"
#include "gdof/types.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace gdof {

struct RegionOptions {
  /// The weighted-sum bound d1 + 2*a22*d2 admits two candidate forms of its
  /// first term. The default derives from the joint signal space at receiver
  /// 2 (same term as the first d1 + a22*d2 bound) and is the one consistent
  /// with finite-SNR slopes and with the private/common share system; the
  /// alternative swaps the antenna/exponent arguments and is kept only for
  /// comparison.
  bool alt_triple_sum_first_term = false;
};

/// The high-SNR rate region: half-spaces over (d1, d2), normalized so user
/// 1's direct link has unit exponent. d2 enters the weighted-sum bounds
/// scaled by its own direct-link exponent.
[[nodiscard]] inline poly::Region2 gdof_region(const AntennaConfig& cfg,
                                               const ExponentProfile& exp,
                                               const RegionOptions& opt = {}) {
  cfg.validate();
  exp.validate();
  const int tx1 = cfg.tx1, rx1 = cfg.rx1, tx2 = cfg.tx2, rx2 = cfg.rx2;
  const Rational a12 = exp.cross12, a21 = exp.cross21, a22 = exp.direct2;
  const Rational b1 = exp.private1(), b2 = exp.private2();
  const int r1 = cfg.cross_rank(1), r2 = cfg.cross_rank(2);
  const int z1 = cfg.null_dims(1), z2 = cfg.null_dims(2);
  const Rational one = 1;

  // Joint fill of each receiver by both transmitters.
  const Rational rx2_joint = two_group_fill(rx2, {a12, tx1}, {a22, tx2});
  const Rational rx1_joint = two_group_fill(rx1, {a21, tx2}, {one, tx1});
  // Each user's private signal seen at its own receiver: the part below the
  // other receiver's noise floor plus the part sent through the cross-link
  // null space at full strength.
  const Rational rx1_private = two_group_fill(rx1, {b1, r1}, {one, z1});
  const Rational rx2_private = two_group_fill(rx2, {b2, r2}, {a22, z2});
  // Cross link plus the other user's private signal at each receiver.
  const Rational rx1_mixed =
      three_group_fill(rx1, {a21, tx2}, {b1, r1}, {one, z1});
  const Rational rx2_mixed =
      three_group_fill(rx2, {a12, tx1}, {b2, r2}, {a22, z2});

  const Rational triple_first =
      opt.alt_triple_sum_first_term
          ? two_group_fill(tx2, {a21, rx1}, {a22, rx2})
          : rx2_joint;

  std::vector<poly::Halfspace2> bounds;
  bounds.push_back({{one, Rational(0)}, Rational(std::min(tx1, rx1))});
  bounds.push_back({{Rational(0), one}, Rational(std::min(tx2, rx2))});
  bounds.push_back({{one, a22}, rx2_joint + rx1_private});
  bounds.push_back({{one, a22}, rx1_joint + rx2_private});
  bounds.push_back({{one, a22}, rx1_mixed + rx2_mixed});
  bounds.push_back({{Rational(2), a22}, rx1_joint + rx1_private + rx2_mixed});
  bounds.push_back({{one, 2 * a22}, triple_first + rx2_private + rx1_mixed});
  return poly::make_region(std::move(bounds));
}

/// Per-receiver decodability constraints on the private/common shares
/// (d1p, d1c, d2p, d2c). Receiver 1's seven rows come first, then receiver
/// 2's; every total-rate bound of gdof_region is a sum of rows from here,
/// which is what makes the projection onto (d1, d2) collapse back to it.
[[nodiscard]] inline poly::SplitRegion split_region(const AntennaConfig& cfg,
                                                    const ExponentProfile& exp) {
  cfg.validate();
  exp.validate();
  const int tx1 = cfg.tx1, rx1 = cfg.rx1, tx2 = cfg.tx2, rx2 = cfg.rx2;
  const Rational a12 = exp.cross12, a21 = exp.cross21, a22 = exp.direct2;
  const Rational b1 = exp.private1(), b2 = exp.private2();
  const int r1 = cfg.cross_rank(1), r2 = cfg.cross_rank(2);
  const int z1 = cfg.null_dims(1), z2 = cfg.null_dims(2);
  const Rational one = 1, zero = 0;

  poly::SplitRegion g;
  auto row = [&](Rational p1, Rational c1, Rational p2, Rational c2, Rational rhs) {
    g.bounds.push_back({{std::move(p1), std::move(c1), std::move(p2), std::move(c2)},
                        std::move(rhs)});
  };

  // Receiver 1: its own private stream, both common streams.
  row(one, zero, zero, zero, two_group_fill(rx1, {b1, r1}, {one, z1}));
  row(zero, one, zero, zero, Rational(std::min({rx1, tx1, rx2})));
  row(zero, zero, zero, a22, std::min(rx1, tx2) * a21);
  row(one, one, zero, zero, Rational(std::min(tx1, rx1)));
  row(one, zero, zero, a22,
      three_group_fill(rx1, {a21, tx2}, {b1, r1}, {one, z1}));
  row(zero, one, zero, a22, two_group_fill(rx1, {a21, tx2}, {one, r1}));
  row(one, one, zero, a22, two_group_fill(rx1, {a21, tx2}, {one, tx1}));

  // Receiver 2, users interchanged. Its own-stream rows carry the a22
  // normalization on both sides; the cross-common row mirrors to user 1's
  // common stream at unit weight.
  row(zero, zero, a22, zero, two_group_fill(rx2, {b2, r2}, {a22, z2}));
  row(zero, zero, zero, a22, std::min({rx2, tx2, rx1}) * a22);
  row(zero, one, zero, zero, std::min(rx2, tx1) * a12);
  row(zero, zero, a22, a22, std::min(tx2, rx2) * a22);
  row(zero, one, a22, zero,
      three_group_fill(rx2, {a12, tx1}, {b2, r2}, {a22, z2}));
  row(zero, one, zero, a22, two_group_fill(rx2, {a12, tx1}, {a22, r2}));
  row(zero, one, a22, a22, two_group_fill(rx2, {a12, tx1}, {a22, tx2}));
  return g;
}

/// Largest equal-rate point under exponent profile [1, a, a, 1]:
/// sup (d1 + d2) / 2 over the region.
[[nodiscard]] inline Rational symmetric_gdof(const AntennaConfig& cfg,
                                             const Rational& alpha) {
  ExponentProfile exp{Rational(1), alpha, alpha, Rational(1)};
  const auto region = gdof_region(cfg, exp);
  return poly::sup_linear(region, {Rational(1), Rational(1)}) / 2;
}

struct CurvePoint {
  Rational alpha;
  Rational value;
};

/// symmetric_gdof sampled over a sweep of cross-link exponents.
[[nodiscard]] inline std::vector<CurvePoint> symmetric_curve(
    const AntennaConfig& cfg, const std::vector<Rational>& sweep) {
  std::vector<CurvePoint> out;
  out.reserve(sweep.size());
  for (const auto& a : sweep) out.push_back({a, symmetric_gdof(cfg, a)});
  return out;
}

/// The channel with the roles of transmitters and receivers interchanged:
/// antenna counts swap within each user and the two cross exponents trade
/// places. Its region equals the original's, which the tests exercise.
[[nodiscard]] inline std::pair<AntennaConfig, ExponentProfile> reciprocal(
    const AntennaConfig& cfg, const ExponentProfile& exp) {
  AntennaConfig rcfg{cfg.rx1, cfg.tx1, cfg.rx2, cfg.tx2};
  ExponentProfile rexp{exp.direct1, exp.cross21, exp.cross12, exp.direct2};
  return {rcfg, rexp};
}

}  // namespace gdof
