#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace treg {

// All coefficients in this library are exact rationals. Iterated operators
// and the factorial-based coefficient tables grow numerators without bound,
// so arbitrary precision is required, not optional.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Parses "n" or "n/d" in base 10. Throws std::invalid_argument on anything else.
inline Rational rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("rational with zero denominator: " + s);
  r.canonicalize();
  return r;
}

// Canonical text: "n" when the denominator is 1, else "n/d", lowest terms.
inline std::string rat_to_string(const Rational& r) { return r.get_str(); }

inline Integer factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

}  // namespace treg
