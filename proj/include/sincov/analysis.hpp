#pragma once

#include <optional>
#include <string_view>

#include "sincov/core.hpp"

namespace sincov {

/// Structural facts about a multiplicative matrix. Computed for any input;
/// `not_a_solution` is set when it fails the multiplicative inequality.
struct AuditReport {
  bool not_a_solution = false;
  bool has_nonpositive = false;
  bool has_zero = false;
  bool all_zero = false;
  bool positive = false;
  double diag_min = 0.0;
  double diag_max = 0.0;
  std::optional<double> bound_c;  // max entry, positive instances only
  bool lower_bound_ok = false;    // min entry >= 1/bound_c
  std::optional<bool> sandwich_ok;  // 1/G(y,x) <= G(a,y)/G(a,x) <= G(x,y)
  bool z_property_sections = false;
};

template <class T>
AuditReport audit(const BasicInstance<T>& inst, const Tolerance& tol = {});

/// Finite form of property (Z): if the values straddle 0, one of them is 0.
template <class T>
bool has_zero_property(std::span<const T> values, const Tolerance& tol = {});

/// G~(x,y) = max_a G(a,y) / G(a,x). Requires strictly positive entries.
template <class T>
BasicInstance<T> tilde(const BasicInstance<T>& inst);

template <class T>
struct ExtremalSolution {
  BasicInstance<T> solution;
  std::size_t witness;  // the maximizing row a*
};

/// Exact Sincov-equation solution S below G built from the row a* maximizing
/// G(a,y0)/G(a,x0) (lowest index on ties): S(b,a) = G(a*,a) / G(a*,b).
/// S(x0,y0) = G~(x0,y0), and 1/G* <= S <= G. Throws DomainError unless G is
/// strictly positive and satisfies the multiplicative inequality under `tol`.
template <class T>
ExtremalSolution<T> extremal_solution(const BasicInstance<T>& inst, std::size_t x0,
                                      std::size_t y0, const Tolerance& tol = {});

}  // namespace sincov
