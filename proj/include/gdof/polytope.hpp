#pragma once

#include "gdof/rational.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gdof::poly {

using Vec2 = std::array<Rational, 2>;

/// coeff[0]*x + coeff[1]*y <= rhs
struct Halfspace2 {
  Vec2 coeff;
  Rational rhs;
};

/// A 2-D region given by half-spaces, always implicitly intersected with the
/// nonnegative quadrant. `vertices` is the canonical description: extreme
/// points in counterclockwise order starting from the lexicographically
/// smallest, so two regions are equal iff their vertex lists are identical.
struct Region2 {
  std::vector<Halfspace2> bounds;
  std::vector<Vec2> vertices;
};

[[nodiscard]] inline Rational dot(const Vec2& a, const Vec2& b) {
  return a[0] * b[0] + a[1] * b[1];
}

[[nodiscard]] inline bool contains(const std::vector<Halfspace2>& bounds, const Vec2& p) {
  if (p[0] < 0 || p[1] < 0) return false;
  for (const auto& h : bounds)
    if (dot(h.coeff, p) > h.rhs) return false;
  return true;
}

[[nodiscard]] inline bool contains(const Region2& r, const Vec2& p) {
  return contains(r.bounds, p);
}

namespace detail {

// Cross product (a - o) x (b - o); positive when o->a->b turns left.
[[nodiscard]] inline Rational cross(const Vec2& o, const Vec2& a, const Vec2& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Andrew's monotone chain. Returns the hull counterclockwise starting at the
// lexicographically smallest point; collinear interior points are dropped.
// Degenerate inputs (a segment or a single point) come out as themselves.
[[nodiscard]] inline std::vector<Vec2> canonical_hull(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;

  std::vector<Vec2> hull;
  auto build = [&](auto begin, auto end) {
    size_t base = hull.size();
    for (auto it = begin; it != end; ++it) {
      while (hull.size() >= base + 2 &&
             cross(hull[hull.size() - 2], hull.back(), *it) <= 0)
        hull.pop_back();
      hull.push_back(*it);
    }
    hull.pop_back();  // endpoint repeats as the next chain's start
  };
  build(pts.begin(), pts.end());
  build(pts.rbegin(), pts.rend());
  if (hull.size() == 1 && pts.size() > 1) hull.push_back(pts.back());
  return hull;
}

// Rows of the full system: user half-spaces followed by the quadrant bounds.
[[nodiscard]] inline std::vector<Halfspace2> with_quadrant(std::vector<Halfspace2> rows) {
  rows.push_back({{Rational(-1), Rational(0)}, Rational(0)});
  rows.push_back({{Rational(0), Rational(-1)}, Rational(0)});
  return rows;
}

// Is there a nonzero recession direction r >= 0 with coeff . r <= 0 for every
// row? The region (already known nonempty) is unbounded exactly then. Any
// extreme ray of the recession cone has some row active, so checking the two
// perpendiculars of every row plus the axes covers all of them.
[[nodiscard]] inline bool has_recession_ray(const std::vector<Halfspace2>& rows) {
  std::vector<Vec2> candidates;
  for (const auto& h : rows) {
    candidates.push_back({h.coeff[1], -h.coeff[0]});
    candidates.push_back({-h.coeff[1], h.coeff[0]});
  }
  for (auto& r : candidates) {
    if (r[0] < 0 || r[1] < 0 || (r[0] == 0 && r[1] == 0)) continue;
    bool recedes = true;
    for (const auto& h : rows)
      if (dot(h.coeff, r) > 0) {
        recedes = false;
        break;
      }
    if (recedes) return true;
  }
  return false;
}

}  // namespace detail

/// Extreme points of the intersection of `bounds` with the nonnegative
/// quadrant, canonically ordered. Empty result means the region is empty.
/// Throws std::domain_error when the (nonempty) region is unbounded, since a
/// vertex list cannot describe it.
[[nodiscard]] inline std::vector<Vec2> enumerate_vertices(
    const std::vector<Halfspace2>& bounds) {
  const auto rows = detail::with_quadrant(bounds);

  std::vector<Vec2> feasible;
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = i + 1; j < rows.size(); ++j) {
      const auto& a = rows[i].coeff;
      const auto& b = rows[j].coeff;
      Rational det = a[0] * b[1] - a[1] * b[0];
      if (det == 0) continue;
      Vec2 p{(rows[i].rhs * b[1] - a[1] * rows[j].rhs) / det,
             (a[0] * rows[j].rhs - rows[i].rhs * b[0]) / det};
      if (contains(bounds, p)) feasible.push_back(p);
    }
  }
  // A nonempty region here is pointed (the quadrant kills every line), so it
  // has a vertex, and every vertex shows up among the pairwise intersections.
  if (feasible.empty()) return {};
  if (detail::has_recession_ray(rows))
    throw std::domain_error("region is unbounded; no finite vertex description");
  return detail::canonical_hull(std::move(feasible));
}

/// Bundle half-spaces with their canonical vertex list.
[[nodiscard]] inline Region2 make_region(std::vector<Halfspace2> bounds) {
  Region2 r;
  r.vertices = enumerate_vertices(bounds);
  r.bounds = std::move(bounds);
  return r;
}

/// Maximum of objective . x over the region. The maximum of a linear
/// functional over a bounded nonempty polytope sits at a vertex.
[[nodiscard]] inline Rational sup_linear(const Region2& r, const Vec2& objective) {
  if (r.vertices.empty())
    throw std::domain_error("supremum over an empty region");
  Rational best = dot(objective, r.vertices.front());
  for (const auto& v : r.vertices) best = max(best, dot(objective, v));
  return best;
}

/// Set equality, independent of how either region is described.
[[nodiscard]] inline bool region_equal(const Region2& a, const Region2& b) {
  return a.vertices == b.vertices;
}

/// General inequality coeff . x <= rhs over a fixed variable ordering.
struct LinearConstraint {
  std::vector<Rational> coeff;
  Rational rhs;
};

/// Constraint system over the four stream shares (d1p, d1c, d2p, d2c),
/// nonnegativity implied. d1p/d1c are user 1's private and common shares,
/// d2p/d2c user 2's.
struct SplitRegion {
  std::vector<LinearConstraint> bounds;
};

struct SplitTuple {
  Rational d1p, d1c, d2p, d2c;
};

namespace detail {

// Scale to coprime integer coefficients (sign preserved). All-zero rows
// collapse to 0 <= rhs: vacuous when rhs >= 0, infeasible otherwise.
struct NormalizedRow {
  std::vector<Rational> coeff;
  Rational rhs;
  bool vacuous = false;
  bool infeasible = false;
};

[[nodiscard]] inline NormalizedRow normalize_row(const LinearConstraint& c) {
  NormalizedRow out;
  bool all_zero = true;
  for (const auto& q : c.coeff)
    if (q != 0) all_zero = false;
  if (all_zero) {
    out.vacuous = c.rhs >= 0;
    out.infeasible = c.rhs < 0;
    return out;
  }
  BigInt lcm = 1;
  auto fold_den = [&](const Rational& q) {
    BigInt d = denominator(q);
    lcm = lcm / gcd(lcm, d) * d;
  };
  for (const auto& q : c.coeff) fold_den(q);
  fold_den(c.rhs);
  BigInt g = 0;
  std::vector<BigInt> ints;
  for (const auto& q : c.coeff) {
    BigInt v = numerator(q) * (lcm / denominator(q));
    g = gcd(g, v);
    ints.push_back(v);
  }
  BigInt rhs_int = numerator(c.rhs) * (lcm / denominator(c.rhs));
  g = gcd(g, rhs_int);
  for (auto& v : ints) out.coeff.emplace_back(v / g);
  out.rhs = Rational(rhs_int / g);
  return out;
}

// Drop exact duplicates and dominated copies (same normal, larger rhs).
// Returns false when an infeasible row was seen.
[[nodiscard]] inline bool prune_rows(std::vector<LinearConstraint>& rows) {
  std::vector<LinearConstraint> kept;
  for (const auto& r : rows) {
    NormalizedRow n = normalize_row(r);
    if (n.infeasible) return false;
    if (n.vacuous) continue;
    bool absorbed = false;
    for (auto& k : kept)
      if (k.coeff == n.coeff) {
        k.rhs = min(k.rhs, n.rhs);
        absorbed = true;
        break;
      }
    if (!absorbed) kept.push_back({std::move(n.coeff), n.rhs});
  }
  rows = std::move(kept);
  return true;
}

// One Fourier-Motzkin step: eliminate the variable at `var`, combining each
// upper-bounding row with each lower-bounding row at positive multipliers.
[[nodiscard]] inline std::vector<LinearConstraint> eliminate_var(
    const std::vector<LinearConstraint>& rows, size_t var) {
  std::vector<LinearConstraint> out;
  std::vector<const LinearConstraint*> uppers, lowers;
  auto drop_col = [var](const LinearConstraint& c) {
    LinearConstraint d;
    d.rhs = c.rhs;
    for (size_t k = 0; k < c.coeff.size(); ++k)
      if (k != var) d.coeff.push_back(c.coeff[k]);
    return d;
  };
  for (const auto& r : rows) {
    if (r.coeff[var] > 0)
      uppers.push_back(&r);
    else if (r.coeff[var] < 0)
      lowers.push_back(&r);
    else
      out.push_back(drop_col(r));
  }
  for (const auto* up : uppers)
    for (const auto* lo : lowers) {
      Rational a = up->coeff[var];
      Rational b = -lo->coeff[var];
      LinearConstraint c;
      for (size_t k = 0; k < up->coeff.size(); ++k) {
        if (k == var) continue;
        c.coeff.push_back(b * up->coeff[k] + a * lo->coeff[k]);
      }
      c.rhs = b * up->rhs + a * lo->rhs;
      out.push_back(std::move(c));
    }
  return out;
}

}  // namespace detail

namespace detail {

// Reduce the four-share system at a fixed total point (d1, d2) to a system
// over (d1p, d2p) by substituting d1c = d1 - d1p, d2c = d2 - d2p, including
// the box 0 <= d1p <= d1, 0 <= d2p <= d2.
[[nodiscard]] inline std::vector<Halfspace2> reduced_share_system(
    const SplitRegion& region, const Vec2& point) {
  std::vector<Halfspace2> rows;
  for (const auto& c : region.bounds) {
    if (c.coeff.size() != 4)
      throw std::invalid_argument("share-split constraints need four coefficients");
    const Rational& p1 = c.coeff[0];
    const Rational& c1 = c.coeff[1];
    const Rational& p2 = c.coeff[2];
    const Rational& c2 = c.coeff[3];
    rows.push_back({{p1 - c1, p2 - c2}, c.rhs - c1 * point[0] - c2 * point[1]});
  }
  rows.push_back({{Rational(1), Rational(0)}, point[0]});
  rows.push_back({{Rational(0), Rational(1)}, point[1]});
  // d1p >= 0 and d2p >= 0 ride along with the implicit quadrant.
  return rows;
}

}  // namespace detail

/// Find a feasible split of the rate point (d1, d2) into private/common
/// shares, i.e. a point of `region` with d1p + d1c = d1 and d2p + d2c = d2.
/// Returns the split with lexicographically largest (d1p, d2p) so the result
/// is deterministic; std::nullopt when the point cannot be split.
[[nodiscard]] inline std::optional<SplitTuple> find_split(const SplitRegion& region,
                                                          const Vec2& point) {
  if (point[0] < 0 || point[1] < 0) return std::nullopt;
  const auto rows = detail::reduced_share_system(region, point);
  const auto vertices = enumerate_vertices(rows);  // box rows keep this bounded
  if (vertices.empty()) return std::nullopt;
  Vec2 best = vertices.front();
  for (const auto& v : vertices)
    if (v > best) best = v;
  return SplitTuple{best[0], point[0] - best[0], best[1], point[1] - best[1]};
}

/// Project the four-share system onto total rates (d1, d2) = (d1p + d1c,
/// d2p + d2c) by Fourier-Motzkin elimination. The returned half-spaces are
/// irredundant: every one is needed (beyond the quadrant) to cut the region.
[[nodiscard]] inline Region2 project_split_region(const SplitRegion& region) {
  // Variables (d1, d2, d1p, d2p) after substituting d1c = d1 - d1p and
  // d2c = d2 - d2p; a share row (p1, c1, p2, c2) becomes
  // c1*d1 + c2*d2 + (p1 - c1)*d1p + (p2 - c2)*d2p.
  std::vector<LinearConstraint> rows;
  for (const auto& c : region.bounds) {
    if (c.coeff.size() != 4)
      throw std::invalid_argument("share-split constraints need four coefficients");
    rows.push_back({{c.coeff[1], c.coeff[3], c.coeff[0] - c.coeff[1],
                     c.coeff[2] - c.coeff[3]},
                    c.rhs});
  }
  auto rat = [](int v) { return Rational(v); };
  rows.push_back({{rat(0), rat(0), rat(-1), rat(0)}, 0});   // d1p >= 0
  rows.push_back({{rat(0), rat(0), rat(0), rat(-1)}, 0});   // d2p >= 0
  rows.push_back({{rat(-1), rat(0), rat(1), rat(0)}, 0});   // d1c >= 0
  rows.push_back({{rat(0), rat(-1), rat(0), rat(1)}, 0});   // d2c >= 0

  const auto infeasible_region = [] {
    Region2 r;
    r.bounds.push_back({{Rational(0), Rational(0)}, Rational(-1)});
    return r;
  };

  for (int pass = 0; pass < 2; ++pass) {
    if (!detail::prune_rows(rows)) return infeasible_region();
    rows = detail::eliminate_var(rows, 2);  // d1p first, then d2p slides down
  }
  if (!detail::prune_rows(rows)) return infeasible_region();

  std::vector<Halfspace2> projected;
  for (const auto& r : rows)
    projected.push_back({{r.coeff[0], r.coeff[1]}, r.rhs});

  // Exact irredundancy sweep: a row may go if the others (with the quadrant)
  // already enforce it. Unbounded "others" keep the row.
  for (size_t i = 0; i < projected.size();) {
    std::vector<Halfspace2> others;
    for (size_t j = 0; j < projected.size(); ++j)
      if (j != i) others.push_back(projected[j]);
    bool redundant = false;
    try {
      auto verts = enumerate_vertices(others);
      if (!verts.empty()) {
        redundant = true;
        for (const auto& v : verts)
          if (dot(projected[i].coeff, v) > projected[i].rhs) {
            redundant = false;
            break;
          }
      }
    } catch (const std::domain_error&) {
      redundant = false;
    }
    if (redundant)
      projected.erase(projected.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  return make_region(std::move(projected));
}

}  // namespace gdof::poly
