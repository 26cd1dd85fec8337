#pragma once

// Scalar backends shared by the recurrence and tree code.
//
// Two number types are supported throughout: IEEE double, where "zero" means
// "within a caller-supplied tolerance", and exact GMP rationals, where zero
// tests and sign tests are exact and tolerances are ignored.

#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace treeloc {

using Rational = mpq_class;

inline bool is_zero(double v, double tol) { return std::abs(v) <= tol; }
inline bool is_zero(const Rational& v, double /*tol*/) { return sgn(v) == 0; }

// Sign with a dead band of width tol around zero (exact for rationals).
inline int sign_of(double v, double tol) {
  if (std::abs(v) <= tol) return 0;
  return v < 0 ? -1 : 1;
}
inline int sign_of(const Rational& v, double /*tol*/) { return sgn(v); }

inline double to_double(double v) { return v; }
inline double to_double(const Rational& v) { return v.get_d(); }

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const Rational& v) { return std::abs(v.get_d()); }

// Exact literal: an integer "p", a fraction "p/q", or a finite decimal
// "-1.25". Returns nullopt for anything else (exponents, inf, nan, junk).
std::optional<Rational> parse_rational(std::string_view text);

// Any number accepted by parse_rational, plus anything strtod accepts fully.
// Throws InputError on junk or non-finite values.
double parse_real(std::string_view text);

// Shortest decimal string that round-trips to the same double.
std::string format_double(double v);

// Canonical "p/q" (or "p" when q = 1).
std::string format_rational(const Rational& v);

}  // namespace treeloc
