#pragma once

#include "gdof/rational.hpp"

#include <stdexcept>

namespace gdof {

/// Antenna counts for the two-user interference channel: user i transmits
/// from tx_i antennas, its intended receiver has rx_i antennas.
struct AntennaConfig {
  int tx1 = 1;
  int rx1 = 1;
  int tx2 = 1;
  int rx2 = 1;

  void validate() const {
    if (tx1 < 1 || rx1 < 1 || tx2 < 1 || rx2 < 1)
      throw std::invalid_argument("antenna counts must be positive");
  }

  /// Rank of the cross link leaving user `user`: min(tx_user, rx_other).
  [[nodiscard]] int cross_rank(int user) const {
    return user == 1 ? std::min(tx1, rx2) : std::min(tx2, rx1);
  }

  /// Dimensions of user `user`'s transmit space unseen by the other receiver:
  /// (tx_user - rx_other)^+.
  [[nodiscard]] int null_dims(int user) const {
    int d = user == 1 ? tx1 - rx2 : tx2 - rx1;
    return d > 0 ? d : 0;
  }
};

/// Link strength exponents: signal on link tx_i -> rx_j scales as rho^a_ij.
/// The direct link of user 1 is the reference and must have exponent 1;
/// inputs that break that are rejected rather than silently renormalized.
struct ExponentProfile {
  Rational direct1 = 1;   // tx1 -> rx1
  Rational cross12 = 0;   // tx1 -> rx2
  Rational cross21 = 0;   // tx2 -> rx1
  Rational direct2 = 1;   // tx2 -> rx2

  void validate() const {
    if (direct1 != 1)
      throw std::invalid_argument("reference direct-link exponent must equal 1");
    if (cross12 < 0 || cross21 < 0 || direct2 < 0)
      throw std::invalid_argument("link exponents must be nonnegative");
  }

  /// Exponent left for user 1's private signal under the other receiver's
  /// noise floor: (direct1 - cross12)^+.
  [[nodiscard]] Rational private1() const { return pos(direct1 - cross12); }

  /// Same for user 2: (direct2 - cross21)^+.
  [[nodiscard]] Rational private2() const { return pos(direct2 - cross21); }
};

}  // namespace gdof
