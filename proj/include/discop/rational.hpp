#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace discop {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar. cpp_rational keeps gcd(num, den) = 1 and den > 0
// after every operation, which is exactly the canonical form we rely on.
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& r) { return numerator(r); }
inline Int den(const Rational& r) { return denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// Largest integer <= r.
inline Int rational_floor(const Rational& r) {
  Int q = numerator(r) / denominator(r);
  if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

// Smallest integer >= r.
inline Int rational_ceil(const Rational& r) { return -rational_floor(-r); }

// Normalizing constructor; accepts a negative or unreduced denominator.
inline Rational make_rational(Int p, Int q) {
  if (q == 0) throw std::invalid_argument("zero denominator");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  return Rational(p, q);
}

inline std::string format_rational(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(s));
    return make_rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
}

// Exact square root when the argument is a perfect square of a rational.
inline std::optional<Rational> exact_sqrt(const Rational& s) {
  if (s < 0) return std::nullopt;
  Int pn = sqrt(numerator(s));
  Int pd = sqrt(denominator(s));
  if (pn * pn == numerator(s) && pd * pd == denominator(s))
    return Rational(pn, pd);
  return std::nullopt;
}

namespace detail {
// Round r up (resp. down) to a multiple of 2^-64. Bounds stay on the safe
// side while keeping numerator/denominator sizes under control.
inline Rational round_up_dyadic(const Rational& r) {
  static const Int scale = Int(1) << 64;
  return Rational(rational_ceil(r * scale), scale);
}
inline Rational round_down_dyadic(const Rational& r) {
  static const Int scale = Int(1) << 64;
  return Rational(rational_floor(r * scale), scale);
}
}  // namespace detail

// Rational upper bound for sqrt(s): exact when s is a perfect square,
// otherwise seeded from integer square roots and sharpened by Newton steps
// from above, outward-rounded.
inline Rational sqrt_upper(const Rational& s) {
  if (s < 0) throw std::invalid_argument("sqrt_upper of negative value");
  if (s == 0) return 0;
  if (auto e = exact_sqrt(s)) return *e;
  Int pn = sqrt(numerator(s)) + 1;  // > sqrt(num)
  Int pd = sqrt(denominator(s));    // <= sqrt(den), >= 1
  Rational u(pn, pd);
  for (int i = 0; i < 6; ++i) {
    u = (u + s / u) / 2;  // Newton from above stays above
    u = detail::round_up_dyadic(u);
  }
  return u;
}

// Rational lower bound for sqrt(s); 0 <= result <= sqrt(s).
inline Rational sqrt_lower(const Rational& s) {
  if (s < 0) throw std::invalid_argument("sqrt_lower of negative value");
  if (s == 0) return 0;
  if (auto e = exact_sqrt(s)) return *e;
  Rational l = s / sqrt_upper(s);
  l = detail::round_down_dyadic(l);
  if (l < 0) l = 0;
  return l;
}

}  // namespace discop
