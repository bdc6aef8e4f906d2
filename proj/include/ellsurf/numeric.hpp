#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "ellsurf/errors.hpp"

namespace ellsurf {

// Everything downstream is exact: arbitrary-precision integers for lattice
// arithmetic, rationals for polynomial/series coefficients.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

// cpp_int's % truncates toward zero; the lattice code wants residues.
inline int mod2(const Int& a) { return a % 2 == 0 ? 0 : 1; }

inline int mod4(const Int& a) {
  Int r = a % 4;
  if (r < 0) r += 4;
  return static_cast<int>(r);
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

// Nearest-integer quotient, used by the unimodular gcd reduction so that
// remainders shrink by at least half each round.
inline Int round_div(const Int& a, const Int& b) {
  return floor_div(2 * a + b, 2 * b);
}

inline Rat make_rat(const Int& num, const Int& den) {
  return Rat(num) / Rat(den);
}

inline Int rat_floor(const Rat& q) {
  return floor_div(numerator(q), denominator(q));
}

inline Int rat_ceil(const Rat& q) {
  return ceil_div(numerator(q), denominator(q));
}

// Floor of sqrt(n) for n >= 0.
inline Int isqrt_floor(const Int& n) {
  if (n < 0) throw math_domain_error("isqrt of negative value");
  return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
  if (n < 0) return false;
  Int s = boost::multiprecision::sqrt(n);
  if (s * s != n) return false;
  if (root) *root = s;
  return true;
}

inline Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline Int int_pow(const Int& base, int e) {
  Int p = 1;
  for (int i = 0; i < e; ++i) p *= base;
  return p;
}

// Rationals print as "num/den", with the denominator omitted when it is 1.
inline std::string format_rat(const Rat& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

inline Int parse_int(const std::string& text, const std::string& what) {
  try {
    if (text.empty()) throw std::runtime_error("empty");
    return Int(text);
  } catch (const std::exception&) {
    throw input_error(what + ": not an integer: '" + text + "'");
  }
}

}  // namespace ellsurf
