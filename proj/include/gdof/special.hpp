#pragma once

#include "gdof/region.hpp"

#include <string>
#include <string_view>

namespace gdof {

/// Single-antenna special case. The general engine covers it; this exists as
/// a named entry point (the closed forms it must match live in the tests).
[[nodiscard]] inline poly::Region2 siso_region(const ExponentProfile& exp) {
  return gdof_region(AntennaConfig{1, 1, 1, 1}, exp);
}

/// Plain degrees of freedom (all links equally strong), reduced form: the
/// box plus one sum bound.
[[nodiscard]] inline poly::Region2 dof_region(const AntennaConfig& cfg) {
  cfg.validate();
  const int tx1 = cfg.tx1, rx1 = cfg.rx1, tx2 = cfg.tx2, rx2 = cfg.rx2;
  const int sum = std::min({tx1 + tx2, rx1 + rx2,
                            std::max(tx1, rx2), std::max(tx2, rx1)});
  std::vector<poly::Halfspace2> bounds;
  bounds.push_back({{Rational(1), Rational(0)}, Rational(std::min(tx1, rx1))});
  bounds.push_back({{Rational(0), Rational(1)}, Rational(std::min(tx2, rx2))});
  bounds.push_back({{Rational(1), Rational(1)}, Rational(sum)});
  return poly::make_region(std::move(bounds));
}

/// The unreduced seven-bound form of the degrees-of-freedom region, written
/// out in min/plus arithmetic over the antenna counts alone. Kept separate
/// from the general engine on purpose: the tests pit the two routes (and the
/// reduced three-bound form) against each other.
[[nodiscard]] inline poly::Region2 dof_region_raw(const AntennaConfig& cfg) {
  cfg.validate();
  const int tx1 = cfg.tx1, rx1 = cfg.rx1, tx2 = cfg.tx2, rx2 = cfg.rx2;
  auto surplus = [](int a, int b) { return std::max(a - b, 0); };

  const int c3 = std::min(rx2, tx1 + tx2) + std::min(rx1, surplus(tx1, rx2));
  const int c4 = std::min(rx1, tx1 + tx2) + std::min(rx2, surplus(tx2, rx1));
  const int rx1_side = std::min(rx1, tx2) +
                       std::min(surplus(rx1, tx2), surplus(tx1, rx2));
  const int rx2_side = std::min(rx2, tx1) +
                       std::min(surplus(rx2, tx1), surplus(tx2, rx1));
  const int c5 = rx1_side + rx2_side;
  const int c6 = std::min(rx1, tx1 + tx2) + std::min(rx1, surplus(tx1, rx2)) +
                 rx2_side;
  const int c7 = std::min(rx2, tx1 + tx2) + std::min(rx2, surplus(tx2, rx1)) +
                 rx1_side;

  std::vector<poly::Halfspace2> bounds;
  bounds.push_back({{Rational(1), Rational(0)}, Rational(std::min(tx1, rx1))});
  bounds.push_back({{Rational(0), Rational(1)}, Rational(std::min(tx2, rx2))});
  bounds.push_back({{Rational(1), Rational(1)}, Rational(c3)});
  bounds.push_back({{Rational(1), Rational(1)}, Rational(c4)});
  bounds.push_back({{Rational(1), Rational(1)}, Rational(c5)});
  bounds.push_back({{Rational(2), Rational(1)}, Rational(c6)});
  bounds.push_back({{Rational(1), Rational(2)}, Rational(c7)});
  return poly::make_region(std::move(bounds));
}

/// Two transmitters sharing one receiver; the second link runs at rho^alpha.
struct MacConfig {
  int tx1 = 1;
  int tx2 = 1;
  int rx = 1;

  void validate() const {
    if (tx1 < 1 || tx2 < 1 || rx < 1)
      throw std::invalid_argument("antenna counts must be positive");
  }
};

[[nodiscard]] inline poly::Region2 mac_gdof_region(const MacConfig& mac,
                                                   const Rational& alpha) {
  mac.validate();
  if (alpha < 0) throw std::invalid_argument("link exponent must be nonnegative");
  std::vector<poly::Halfspace2> bounds;
  bounds.push_back({{Rational(1), Rational(0)}, Rational(std::min(mac.tx1, mac.rx))});
  bounds.push_back({{Rational(0), Rational(1)}, std::min(mac.tx2, mac.rx) * alpha});
  bounds.push_back({{Rational(1), Rational(1)},
                    two_group_fill(mac.rx, {alpha, mac.tx2}, {Rational(1), mac.tx1})});
  return poly::make_region(std::move(bounds));
}

/// Rate box when each receiver treats the other user's signal as noise, for
/// a symmetric channel (both users tx antennas against rx antennas, cross
/// links at rho^alpha). Per-user side: what the joint receive space carries
/// minus what the interference occupies.
[[nodiscard]] inline poly::Region2 tin_gdof_region(int tx, int rx,
                                                   const Rational& alpha) {
  if (tx < 1 || rx < 1)
    throw std::invalid_argument("antenna counts must be positive");
  if (alpha < 0) throw std::invalid_argument("link exponent must be nonnegative");
  const Rational side = two_group_fill(rx, {alpha, tx}, {Rational(1), tx}) -
                        std::min(tx, rx) * alpha;
  std::vector<poly::Halfspace2> bounds;
  bounds.push_back({{Rational(1), Rational(0)}, side});
  bounds.push_back({{Rational(0), Rational(1)}, side});
  return poly::make_region(std::move(bounds));
}

struct CurveParams {
  int tx = 0;
  int rx = 0;
  std::vector<Rational> sweep;
};

namespace detail {

// Closed-form symmetric value for a (tx, rx, tx, rx) channel, as a function
// of the cross exponent. Written against the smaller/larger antenna count;
// the two orientations are reciprocal so one formula serves both.
[[nodiscard]] inline Rational symmetric_closed_form(int tx, int rx,
                                                    const Rational& a) {
  const int p = std::min(tx, rx);
  const int q = std::max(tx, rx);
  Rational branch;
  if (a < Rational(1, 2))
    branch = p - (2 * p - q) * a;
  else if (a <= Rational(2, 3))
    branch = (q - p) + (2 * p - q) * a;
  else if (a <= 1)
    branch = p - a * (2 * p - q) / 2;
  else
    branch = Rational(q, 2) + Rational(p, 2) * (a - 1);
  return min(Rational(p), branch);
}

}  // namespace detail

/// Named curves for the survey plots. "w-curve-MgeN" is the closed-form
/// symmetric value of a (tx, rx, tx, rx) channel; "v-curve-1121" is the
/// equal-rate value of the (1,1,2,1) channel, whose shape degenerates from
/// the usual W to a V; "tin-overlay" is the symmetric value achievable when
/// interference is treated as noise. Each equals the matching engine
/// computation, which the tests enforce sample by sample.
[[nodiscard]] inline std::vector<CurvePoint> insight_curve(std::string_view name,
                                                           const CurveParams& params) {
  std::vector<CurvePoint> out;
  out.reserve(params.sweep.size());
  if (name == "w-curve-MgeN") {
    if (params.tx < 1 || params.rx < 1)
      throw std::invalid_argument("curve needs positive antenna counts");
    for (const auto& a : params.sweep)
      out.push_back({a, detail::symmetric_closed_form(params.tx, params.rx, a)});
  } else if (name == "v-curve-1121") {
    for (const auto& a : params.sweep) {
      Rational v;
      if (a <= 1)
        v = 1 - a / 2;
      else if (a <= 2)
        v = a / 2;
      else
        v = 1;
      out.push_back({a, v});
    }
  } else if (name == "tin-overlay") {
    if (params.tx < 1 || params.rx < 1)
      throw std::invalid_argument("curve needs positive antenna counts");
    for (const auto& a : params.sweep) {
      const auto box = tin_gdof_region(params.tx, params.rx, a);
      out.push_back({a, poly::sup_linear(box, {Rational(1), Rational(1)}) / 2});
    }
  } else {
    throw std::invalid_argument("unknown curve: " + std::string(name));
  }
  return out;
}

}  // namespace gdof
