#include <catch2/catch_amalgamated.hpp>

#include <gdof/mac_bounds.hpp>

#include <random>
#include <stdexcept>

using gdof::Rational;
using gdof::WeightedTerm;
using gdof::three_group_fill;
using gdof::two_group_fill;

TEST_CASE("worked two-group values") {
  // regime where the receiver has spare dimensions: every antenna is served
  REQUIRE(two_group_fill(8, {Rational(1, 2), 3}, {Rational(1), 4}) == Rational(11, 2));
  // receiver saturated by the stronger group alone
  REQUIRE(two_group_fill(2, {Rational(1), 2}, {Rational(1, 2), 2}) == 2);
  REQUIRE(two_group_fill(5, {Rational(1), 2}, {Rational(1, 2), 2}) == 3);
  REQUIRE(two_group_fill(3, {Rational(3, 5), 3}, {Rational(1), 0}) == Rational(9, 5));
  REQUIRE(two_group_fill(3, {Rational(0), 2}, {Rational(0), 2}) == 0);
  REQUIRE(two_group_fill(1, {Rational(1, 2), 1}, {Rational(1), 1}) == 1);
}

TEST_CASE("worked three-group values") {
  REQUIRE(three_group_fill(10, {Rational(1, 2), 3}, {Rational(1), 4}, {Rational(6, 5), 2}) ==
          Rational(79, 10));
  REQUIRE(three_group_fill(3, {Rational(1), 1}, {Rational(3, 5), 2}, {Rational(2, 5), 2}) ==
          Rational(11, 5));
}

TEST_CASE("degenerate widths and dimensions") {
  REQUIRE(two_group_fill(0, {Rational(1), 3}, {Rational(2), 4}) == 0);
  REQUIRE(two_group_fill(4, {Rational(1), 0}, {Rational(1, 2), 0}) == 0);
  // zero-width third group reduces to the two-group value
  std::mt19937 rng(991);
  for (int i = 0; i < 50; ++i) {
    const int dims = static_cast<int>(rng() % 8);
    const WeightedTerm a{Rational(static_cast<int>(rng() % 25), 12), static_cast<int>(rng() % 5)};
    const WeightedTerm b{Rational(static_cast<int>(rng() % 25), 12), static_cast<int>(rng() % 5)};
    REQUIRE(three_group_fill(dims, a, b, {Rational(7), 0}) == two_group_fill(dims, a, b));
  }
}

TEST_CASE("negative exponents contribute nothing") {
  REQUIRE(two_group_fill(4, {Rational(-1), 3}, {Rational(1), 2}) == 2);
  REQUIRE(three_group_fill(4, {Rational(-2), 1}, {Rational(-1), 1}, {Rational(1, 3), 2}) ==
          Rational(2, 3));
}

TEST_CASE("invalid shapes are rejected") {
  REQUIRE_THROWS_AS(two_group_fill(-1, {Rational(1), 1}, {Rational(1), 1}),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(two_group_fill(2, {Rational(1), -3}, {Rational(1), 1}),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(three_group_fill(2, {Rational(1), 1}, {Rational(1), 1}, {Rational(1), -1}),
                    std::invalid_argument);
}

namespace {

WeightedTerm random_term(std::mt19937& rng) {
  return {Rational(static_cast<int>(rng() % 30), 1 + static_cast<int>(rng() % 11)),
          static_cast<int>(rng() % 5)};
}

}  // namespace

TEST_CASE("group order never matters") {
  std::mt19937 rng(4257);
  for (int i = 0; i < 200; ++i) {
    const int dims = static_cast<int>(rng() % 9);
    const WeightedTerm a = random_term(rng);
    const WeightedTerm b = random_term(rng);
    const WeightedTerm c = random_term(rng);

    REQUIRE(two_group_fill(dims, a, b) == two_group_fill(dims, b, a));

    const Rational base = three_group_fill(dims, a, b, c);
    REQUIRE(three_group_fill(dims, a, c, b) == base);
    REQUIRE(three_group_fill(dims, b, a, c) == base);
    REQUIRE(three_group_fill(dims, b, c, a) == base);
    REQUIRE(three_group_fill(dims, c, a, b) == base);
    REQUIRE(three_group_fill(dims, c, b, a) == base);
  }
}

TEST_CASE("serving the strongest group first, the rest reduces to two groups") {
  std::mt19937 rng(77);
  for (int i = 0; i < 200; ++i) {
    const int dims = static_cast<int>(rng() % 9);
    WeightedTerm a = random_term(rng);
    const WeightedTerm b = random_term(rng);
    const WeightedTerm c = random_term(rng);
    // make a the (weakly) dominant group
    a.exponent += gdof::max(b.exponent, c.exponent);

    const int served = std::min(dims, a.width);
    const Rational expected =
        served * gdof::pos(a.exponent) + two_group_fill(dims - served, b, c);
    REQUIRE(three_group_fill(dims, a, b, c) == expected);
  }
}

TEST_CASE("more receive dimensions never reduce the fill") {
  std::mt19937 rng(15);
  for (int i = 0; i < 100; ++i) {
    const int dims = static_cast<int>(rng() % 8);
    const WeightedTerm a = random_term(rng);
    const WeightedTerm b = random_term(rng);
    const WeightedTerm c = random_term(rng);
    REQUIRE(three_group_fill(dims, a, b, c) <= three_group_fill(dims + 1, a, b, c));
    REQUIRE(two_group_fill(dims, a, b) <= two_group_fill(dims + 1, a, b));
  }
}
