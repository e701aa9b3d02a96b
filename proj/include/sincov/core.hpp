#pragma once

#include <cstddef>
#include <limits>
#include <string_view>
#include <vector>

#include "sincov/instance.hpp"

namespace sincov {

/// The four laws a matrix can be checked against.
///   mult_eq       S(x,z) == S(x,y) * S(y,z)
///   mult_ineq     G(x,z) <= G(x,y) * G(y,z)
///   reverse_ineq  F(x,z) >= F(x,y) * F(y,z)
///   triangle      H(x,z) <= H(x,y) + H(y,z)   (additive mode)
enum class Law { mult_eq, mult_ineq, reverse_ineq, triangle };

std::string_view to_string(Law law);
Law parse_law(std::string_view text);
Mode required_mode(Law law);

struct Violation {
  std::size_t x = 0, y = 0, z = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;  // normalized excess, always > 0
};

struct ViolationReport {
  Law law = Law::mult_ineq;
  bool pass = true;
  std::vector<Violation> violations;  // lexicographic (x,y,z), possibly truncated
  std::size_t total_violations = 0;
  std::size_t checked_triples = 0;
};

inline constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

/// Enumerates all n^3 ordered triples. A float instance is checked exactly
/// when tol.exact is set. Throws UsageError on a law/mode mismatch or
/// max_violations == 0.
template <class T>
ViolationReport validate(const BasicInstance<T>& inst, Law law,
                         const Tolerance& tol = {},
                         std::size_t max_violations = kUnlimited);

/// Early-exit form of validate.
template <class T>
bool satisfies(const BasicInstance<T>& inst, Law law, const Tolerance& tol = {});

/// G*(x,y) = G(y,x).
template <class T>
BasicInstance<T> dual(const BasicInstance<T>& inst);

}  // namespace sincov
