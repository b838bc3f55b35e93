#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace gdof {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar used throughout the region computations.
/// All region geometry is done in this type; doubles appear only in the
/// Monte Carlo layer and in serialized "approx" convenience fields.
using Rational = boost::multiprecision::cpp_rational;

/// max(r, 0), the positive part that shows up in every antenna-surplus term.
[[nodiscard]] inline Rational pos(const Rational& r) {
  return r > 0 ? r : Rational(0);
}

[[nodiscard]] inline const Rational& min(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}

[[nodiscard]] inline const Rational& max(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}

namespace detail {

inline BigInt parse_digits(std::string_view s, std::string_view whole) {
  if (s.empty())
    throw std::invalid_argument("rational parse: missing digits in '" + std::string(whole) + "'");
  BigInt v = 0;
  for (char c : s) {
    if (c < '0' || c > '9')
      throw std::invalid_argument("rational parse: bad character in '" + std::string(whole) + "'");
    v = v * 10 + (c - '0');
  }
  return v;
}

}  // namespace detail

/// Parse "p", "-p", "p/q" or a decimal like "0.35" without going through
/// floating point, so every representable input is read losslessly.
[[nodiscard]] inline Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    BigInt num = detail::parse_digits(s.substr(0, slash), text);
    BigInt den = detail::parse_digits(s.substr(slash + 1), text);
    if (den == 0)
      throw std::invalid_argument("rational parse: zero denominator in '" + std::string(text) + "'");
    value = Rational(num, den);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    BigInt whole = dot == 0 ? BigInt(0) : detail::parse_digits(s.substr(0, dot), text);
    std::string_view frac = s.substr(dot + 1);
    BigInt num = detail::parse_digits(frac, text);
    BigInt den = 1;
    for (size_t i = 0; i < frac.size(); ++i) den *= 10;
    value = Rational(whole * den + num, den);
  } else {
    value = Rational(detail::parse_digits(s, text));
  }
  return negative ? Rational(-value) : value;
}

/// "p/q", or just "p" for integers.
[[nodiscard]] inline std::string format_rational(const Rational& r) {
  std::string out = numerator(r).str();
  if (denominator(r) != 1) {
    out += '/';
    out += denominator(r).str();
  }
  return out;
}

[[nodiscard]] inline double to_double(const Rational& r) {
  return r.convert_to<double>();
}

}  // namespace gdof
