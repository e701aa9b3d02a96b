#pragma once

// Slack-aware comparisons used by the library modules. In exact arithmetic
// every comparison is strict; in floating point a comparison a <= b passes
// when a exceeds b by at most rel * max(1, |scale|).

#include <algorithm>
#include <optional>

#include "sincov/instance.hpp"

namespace sincov::detail {

template <class T>
struct Slack {
  double rel = 0.0;
  double zero_tol = 0.0;

  explicit Slack(const Tolerance& tol) {
    if constexpr (!kIsExact<T>) {
      rel = tol.rel;
      zero_tol = tol.zero_tol;
    }
  }

  /// Excess of lhs over rhs normalized by max(1, |scale|), when it is beyond
  /// the slack.
  std::optional<double> excess(const T& lhs, const T& rhs, const T& scale) const {
    if constexpr (kIsExact<T>) {
      if (!(lhs > rhs)) return std::nullopt;
      Rational s = abs(scale);
      if (s < 1) s = 1;
      Rational d = (lhs - rhs) / s;
      return d.get_d();
    } else {
      double d = (lhs - rhs) / std::max(1.0, std::fabs(scale));
      if (d > rel) return d;
      return std::nullopt;
    }
  }

  bool le(const T& a, const T& b) const { return !excess(a, b, b); }
  bool ge(const T& a, const T& b) const { return !excess(b, a, b); }
  bool eq(const T& a, const T& b) const { return le(a, b) && ge(a, b); }

  bool is_zero(const T& v) const {
    if constexpr (kIsExact<T>) {
      return sgn(v) == 0;
    } else {
      return std::fabs(v) <= zero_tol;
    }
  }
  bool positive(const T& v) const {
    if constexpr (kIsExact<T>) {
      return sgn(v) > 0;
    } else {
      return v > zero_tol;
    }
  }
  bool negative(const T& v) const {
    if constexpr (kIsExact<T>) {
      return sgn(v) < 0;
    } else {
      return v < -zero_tol;
    }
  }
};

template <class T>
T identity(Mode mode) {
  return mode == Mode::multiplicative ? T(1) : T(0);
}

}  // namespace sincov::detail
