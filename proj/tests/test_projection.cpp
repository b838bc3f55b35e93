#include <catch2/catch_amalgamated.hpp>

#include <gdof/polytope.hpp>

#include <random>
#include <vector>

using gdof::Rational;
using gdof::poly::LinearConstraint;
using gdof::poly::SplitRegion;
using gdof::poly::SplitTuple;
using gdof::poly::Vec2;

namespace {

bool satisfies(const SplitRegion& split, const SplitTuple& t) {
  if (t.d1p < 0 || t.d1c < 0 || t.d2p < 0 || t.d2c < 0) return false;
  for (const auto& row : split.bounds) {
    const Rational lhs = row.coeff[0] * t.d1p + row.coeff[1] * t.d1c +
                         row.coeff[2] * t.d2p + row.coeff[3] * t.d2c;
    if (lhs > row.rhs) return false;
  }
  return true;
}

// Bounded nonnegative 4-variable systems: per-variable caps plus a few mixed
// rows, all with nonnegative coefficients and rhs.
SplitRegion random_split(std::mt19937& rng) {
  SplitRegion split;
  for (int v = 0; v < 4; ++v) {
    LinearConstraint cap{{Rational(0), Rational(0), Rational(0), Rational(0)},
                         Rational(8 + static_cast<int>(rng() % 25), 16)};
    cap.coeff[v] = 1;
    split.bounds.push_back(cap);
  }
  const int extra = 2 + static_cast<int>(rng() % 3);
  for (int k = 0; k < extra; ++k) {
    LinearConstraint row{{Rational(0), Rational(0), Rational(0), Rational(0)},
                         Rational(static_cast<int>(rng() % 48), 16)};
    for (int v = 0; v < 4; ++v)
      row.coeff[v] = Rational(static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 2));
    if (row.coeff == std::vector<Rational>{0, 0, 0, 0}) row.coeff[0] = 1;
    split.bounds.push_back(row);
  }
  return split;
}

}  // namespace

TEST_CASE("single share constraint projects to a box") {
  SplitRegion split;
  split.bounds.push_back({{Rational(1), Rational(1), Rational(0), Rational(0)}, Rational(1)});
  split.bounds.push_back({{Rational(0), Rational(0), Rational(1), Rational(0)}, Rational(1)});
  split.bounds.push_back({{Rational(0), Rational(0), Rational(0), Rational(1)}, Rational(1)});

  const auto projection = gdof::poly::project_split_region(split);
  REQUIRE(projection.vertices == std::vector<Vec2>{{Rational(0), Rational(0)},
                                                   {Rational(1), Rational(0)},
                                                   {Rational(1), Rational(2)},
                                                   {Rational(0), Rational(2)}});
}

TEST_CASE("infeasible share systems project to nothing") {
  SplitRegion split;
  split.bounds.push_back({{Rational(1), Rational(1), Rational(1), Rational(1)}, Rational(-1)});
  const auto projection = gdof::poly::project_split_region(split);
  REQUIRE(projection.vertices.empty());
  REQUIRE(gdof::poly::find_split(split, {Rational(0), Rational(0)}) == std::nullopt);
}

TEST_CASE("witness search rejects points outside the orthant or far away") {
  SplitRegion split;
  split.bounds.push_back({{Rational(1), Rational(1), Rational(1), Rational(1)}, Rational(3)});
  for (int v = 0; v < 4; ++v) {
    LinearConstraint cap{{Rational(0), Rational(0), Rational(0), Rational(0)}, Rational(1)};
    cap.coeff[v] = 1;
    split.bounds.push_back(cap);
  }
  REQUIRE(gdof::poly::find_split(split, {Rational(10), Rational(10)}) == std::nullopt);
  REQUIRE(gdof::poly::find_split(split, {Rational(-1, 8), Rational(0)}) == std::nullopt);

  const auto w = gdof::poly::find_split(split, {Rational(3, 2), Rational(1)});
  REQUIRE(w.has_value());
  REQUIRE(satisfies(split, *w));
  REQUIRE(w->d1p + w->d1c == Rational(3, 2));
  REQUIRE(w->d2p + w->d2c == 1);
}

TEST_CASE("projection agrees with per-point witness search") {
  std::mt19937 rng(909);
  const int grid = 8;

  for (int trial = 0; trial < 5; ++trial) {
    const auto split = random_split(rng);
    const auto projection = gdof::poly::project_split_region(split);
    REQUIRE_FALSE(projection.vertices.empty());

    for (int i = 0; i <= 5 * grid / 2; ++i) {
      for (int j = 0; j <= 5 * grid / 2; ++j) {
        const Vec2 p{Rational(i, grid), Rational(j, grid)};
        const auto witness = gdof::poly::find_split(split, p);
        const bool inside = gdof::poly::contains(projection.bounds, p);
        REQUIRE(witness.has_value() == inside);
        if (witness) {
          REQUIRE(satisfies(split, *witness));
          REQUIRE(witness->d1p + witness->d1c == p[0]);
          REQUIRE(witness->d2p + witness->d2c == p[1]);
        }
      }
    }
  }
}

TEST_CASE("projection vertices are themselves splittable and tight") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 8; ++trial) {
    const auto split = random_split(rng);
    const auto projection = gdof::poly::project_split_region(split);

    for (const auto& v : projection.vertices) {
      const auto witness = gdof::poly::find_split(split, v);
      REQUIRE(witness.has_value());
      REQUIRE(satisfies(split, *witness));
    }
    for (const auto& h : projection.bounds) {
      bool tight = false;
      for (const auto& v : projection.vertices)
        tight = tight || gdof::poly::dot(h.coeff, v) == h.rhs;
      REQUIRE(tight);
    }

    const auto again = gdof::poly::make_region(projection.bounds);
    REQUIRE(gdof::poly::region_equal(projection, again));
  }
}
