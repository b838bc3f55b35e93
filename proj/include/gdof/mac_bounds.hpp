#pragma once

#include "gdof/rational.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace gdof {

/// One signal group entering a shared receive space: `width` spatial
/// dimensions arriving at strength exponent `exponent`.
struct WeightedTerm {
  Rational exponent;
  int width = 0;
};

namespace detail {

/// Greedy fill of `dims` receive dimensions by the given signal groups,
/// strongest exponent first. Each group occupies at most `width` dimensions
/// and each occupied dimension contributes the group's positive part of the
/// exponent. Ties are broken by input order, which matches how the bounds
/// are written out (the value is tie-order invariant anyway since equal
/// exponents contribute equally per dimension).
template <size_t N>
[[nodiscard]] Rational fill_dims(int dims, std::array<WeightedTerm, N> terms) {
  if (dims < 0) throw std::invalid_argument("receive dimension count must be nonnegative");
  for (const auto& t : terms)
    if (t.width < 0) throw std::invalid_argument("signal group width must be nonnegative");

  std::stable_sort(terms.begin(), terms.end(),
                   [](const WeightedTerm& a, const WeightedTerm& b) {
                     return a.exponent > b.exponent;
                   });
  Rational total = 0;
  int remaining = dims;
  for (const auto& t : terms) {
    if (remaining == 0) break;
    int used = std::min(remaining, t.width);
    total += used * pos(t.exponent);
    remaining -= used;
  }
  return total;
}

}  // namespace detail

/// Sum rate exponent of a `dims`-antenna receive space shared by two signal
/// groups. Piecewise linear in the exponents; exact over rationals.
[[nodiscard]] inline Rational two_group_fill(int dims, const WeightedTerm& a,
                                             const WeightedTerm& b) {
  return detail::fill_dims(dims, std::array{a, b});
}

/// Three-group variant. Satisfies the peeling identity
///   three_group_fill(u, t1, t2, t3)
///     = min(u, t1.width) * pos(t1.exponent)
///       + two_group_fill((u - t1.width)^+, t2, t3)
/// whenever t1 has the largest exponent, and is invariant under permuting
/// the groups.
[[nodiscard]] inline Rational three_group_fill(int dims, const WeightedTerm& a,
                                               const WeightedTerm& b,
                                               const WeightedTerm& c) {
  return detail::fill_dims(dims, std::array{a, b, c});
}

}  // namespace gdof
