#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sincov/core.hpp"

namespace sincov {

/// Entrywise reciprocal 1/F. Throws DomainError if any entry is <= zero_tol.
template <class T>
BasicInstance<T> invert(const BasicInstance<T>& inst, const Tolerance& tol = {});

struct FspReport {
  bool passes_reverse = false;
  bool diag_in_unit_interval = false;  // every F(x,x) in [0,1]
  bool z_hypothesis = false;           // for each (x,y): row x or column y has (Z)
  bool nonnegative = false;
  /// A solution whose sections satisfy the (Z) hypothesis but which takes a
  /// negative value. Never expected.
  bool theorem_violation = false;
};

template <class T>
FspReport fsp_audit(const BasicInstance<T>& inst, const Tolerance& tol = {});

/// Pairs (row, col) where |F| <= zero_tol.
struct ZeroSet {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::vector<std::size_t>> row_view;  // row_view[x] = {y : (x,y) in Z}
};

enum class FZKind { row_contained, column_contained, cross, alternative_violated };

std::string_view to_string(FZKind kind);

struct FZOutcome {
  std::size_t a = 0, b = 0;
  FZKind kind = FZKind::row_contained;
  std::vector<std::size_t> u1;  // cross: {x : F(a,x) > 0}
  std::vector<std::size_t> u2;  // cross: {x : F(x,b) > 0}
  std::optional<std::size_t> witness;  // alternative_violated: x with F(a,x), F(x,b) both nonzero
};

struct ZeroStructure {
  ZeroSet zeros;
  std::vector<FZOutcome> outcomes;  // one per zero, in row-major order
  std::size_t full_zero_rows = 0;
  std::size_t full_zero_columns = 0;
  std::size_t cross_count = 0;
  std::size_t violated_count = 0;
};

template <class T>
ZeroSet zero_set(const BasicInstance<T>& inst, const Tolerance& tol = {});

/// Classifies every zero (a,b) of a non-negative solution of the reverse
/// inequality: a zero row through it, a zero column through it, or a cross of
/// zeros U1 x {b} u {a} x U2 with maximal witness sets. Throws DomainError on
/// negative entries.
template <class T>
ZeroStructure zero_structure(const BasicInstance<T>& inst, const Tolerance& tol = {});

}  // namespace sincov
