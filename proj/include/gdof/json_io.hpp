#pragma once

#include <gdof/polytope.hpp>
#include <gdof/rational.hpp>
#include <gdof/region.hpp>
#include <gdof/slope_check.hpp>

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gdof::io {

using nlohmann::json;

namespace detail {

inline std::int64_t to_int64(const BigInt& v, const char* what) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (v < lo || v > hi)
    throw std::overflow_error(std::string(what) + " does not fit in a 64-bit integer");
  return v.convert_to<std::int64_t>();
}

/// Shortest-ish decimal for CSV cells. ostream default formatting at
/// precision 15 drops trailing zeros, which keeps the files readable and
/// byte-stable for identical inputs.
inline std::string format_double(double v) {
  std::ostringstream os;
  os.precision(15);
  os << v;
  return os.str();
}

}  // namespace detail

/// {"num": p, "den": q, "approx": p/q as double}. Exactness lives in
/// num/den; approx is a plotting convenience only.
inline json to_json(const Rational& r) {
  return json{{"num", detail::to_int64(numerator(r), "numerator")},
              {"den", detail::to_int64(denominator(r), "denominator")},
              {"approx", to_double(r)}};
}

inline Rational rational_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw std::invalid_argument("rational json: expected an object with num/den");
  const std::int64_t num = j.at("num").get<std::int64_t>();
  const std::int64_t den = j.at("den").get<std::int64_t>();
  if (den == 0) throw std::invalid_argument("rational json: zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

inline json to_json(const poly::Region2& region) {
  json halfspaces = json::array();
  for (const auto& h : region.bounds) {
    halfspaces.push_back(json{{"c", json::array({to_json(h.coeff[0]), to_json(h.coeff[1])})},
                              {"rhs", to_json(h.rhs)}});
  }
  json vertices = json::array();
  for (const auto& v : region.vertices)
    vertices.push_back(json::array({to_json(v[0]), to_json(v[1])}));
  return json{{"halfspaces", halfspaces}, {"vertices", vertices}};
}

inline poly::Region2 region_from_json(const json& j) {
  std::vector<poly::Halfspace2> bounds;
  for (const auto& h : j.at("halfspaces")) {
    const auto& c = h.at("c");
    if (c.size() != 2) throw std::invalid_argument("region json: halfspace needs 2 coefficients");
    bounds.push_back({{rational_from_json(c[0]), rational_from_json(c[1])},
                      rational_from_json(h.at("rhs"))});
  }
  poly::Region2 region;
  region.bounds = std::move(bounds);
  for (const auto& v : j.at("vertices")) {
    if (v.size() != 2) throw std::invalid_argument("region json: vertex needs 2 coordinates");
    region.vertices.push_back({rational_from_json(v[0]), rational_from_json(v[1])});
  }
  return region;
}

inline json to_json(const poly::SplitRegion& split) {
  json halfspaces = json::array();
  for (const auto& row : split.bounds) {
    json c = json::array();
    for (const auto& coeff : row.coeff) c.push_back(to_json(coeff));
    halfspaces.push_back(json{{"c", c}, {"rhs", to_json(row.rhs)}});
  }
  return json{{"halfspaces", halfspaces}};
}

inline json to_json(const verify::SlopeReport& report) {
  return json{{"label", report.label},
              {"predicted", report.predicted},
              {"estimated", report.estimated},
              {"abs_error", report.abs_error},
              {"pass", report.pass}};
}

inline json verify_to_json(const std::string& suite,
                           const std::vector<verify::SlopeReport>& reports) {
  json items = json::array();
  bool all_pass = true;
  for (const auto& r : reports) {
    items.push_back(to_json(r));
    all_pass = all_pass && r.pass;
  }
  return json{{"suite", suite}, {"reports", items}, {"pass", all_pass}};
}

/// Two-column gnuplot input, header included.
inline std::string curve_to_csv(const std::vector<CurvePoint>& curve) {
  std::string out = "alpha,d_s\n";
  for (const auto& p : curve) {
    out += detail::format_double(to_double(p.alpha));
    out += ',';
    out += detail::format_double(to_double(p.value));
    out += '\n';
  }
  return out;
}

/// Vertex list as plot-ready rows.
inline std::string region_to_csv(const poly::Region2& region) {
  std::string out = "d1,d2\n";
  for (const auto& v : region.vertices) {
    out += detail::format_double(to_double(v[0]));
    out += ',';
    out += detail::format_double(to_double(v[1]));
    out += '\n';
  }
  return out;
}

}  // namespace gdof::io
