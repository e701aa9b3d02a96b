#pragma once

// Scalar support shared by the float (double) and exact (mpq_class) code paths.

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <string_view>
#include <type_traits>

namespace sincov {

using Rational = mpq_class;

template <class T>
inline constexpr bool kIsExact = std::is_same_v<T, Rational>;

inline double to_double(double v) { return v; }
inline double to_double(const Rational& v) { return v.get_d(); }

/// Lossless: every finite double is a dyadic rational.
Rational to_rational(double v);

inline bool is_finite(double v) { return std::isfinite(v); }
inline bool is_finite(const Rational&) { return true; }

inline double abs_value(double v) { return std::fabs(v); }
inline Rational abs_value(const Rational& v) { return abs(v); }

/// "p/q", "p", or a plain decimal literal ("-1.25e-3"). Decimals are read
/// exactly, so "0.1" is 1/10 and not the nearest double.
Rational parse_rational(std::string_view text);

/// Reads a decimal or "p/q" string as the nearest double.
double parse_double(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational& v);

/// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

template <class T>
T from_double(double v) {
  if constexpr (kIsExact<T>) {
    return to_rational(v);
  } else {
    return v;
  }
}

}  // namespace sincov
