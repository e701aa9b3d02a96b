#pragma once

#include <string_view>
#include <vector>

#include "sincov/core.hpp"

namespace sincov {

/// A one-variable function on the labels of an instance.
template <class T>
struct BasicPotential {
  std::vector<T> values;
  bool operator==(const BasicPotential&) const = default;
};

/// Finite family of potentials over a shared label set.
template <class T>
struct BasicPotentialFamily {
  std::vector<std::string> labels;
  Mode mode = Mode::multiplicative;
  std::vector<BasicPotential<T>> members;
};

using Potential = BasicPotential<double>;
using PotentialFamily = BasicPotentialFamily<double>;

/// Which class a potential is tested against:
///   g_class  f(x)/f(y) <= G(x,y)
///   f_class  f(x)/f(y) >= F(x,y)
///   h_class  phi(x) - phi(y) <= H(x,y)
enum class PotentialClass { g_class, f_class, h_class };
enum class Direction { sup, inf };

PotentialClass parse_potential_class(std::string_view text);
Direction parse_direction(std::string_view text);

template <class T>
bool member_of(const BasicPotential<T>& f, const BasicInstance<T>& inst,
               PotentialClass cls, const Tolerance& tol = {});

/// Columns f_c(x) = G(x,c) (additive: H(x,c)). Throws DomainError unless
/// the instance is a strictly positive solution of the multiplicative
/// inequality, or (additive) satisfies the triangle inequality.
template <class T>
BasicPotentialFamily<T> canonical_family(const BasicInstance<T>& inst,
                                         const Tolerance& tol = {});

/// sup: R(a,b) = max_f f(a)/f(b)  (additive: max_phi phi(a) - phi(b))
/// inf: R(a,b) = min_f f(a)/f(b)  (multiplicative only)
template <class T>
BasicInstance<T> reconstruct(const BasicPotentialFamily<T>& family, Direction dir);

template <class T>
struct EquationSolution {
  enum class Kind { potential, zero, none };
  Kind kind = Kind::none;
  BasicPotential<T> potential;  // f(x) = S(x, first label), when kind == potential
};

/// Recovers f with S(a,b) = f(a)/f(b), or reports the zero solution, or none
/// when S does not solve Sincov's equation.
template <class T>
EquationSolution<T> solve_equation(const BasicInstance<T>& inst,
                                   const Tolerance& tol = {});

enum class Comparability { equal, incomparable, violation };

std::string_view to_string(Comparability c);

/// Two Sincov-equation solutions that are entrywise comparable must be equal;
/// `violation` reports comparable-but-unequal. Throws UsageError on label
/// mismatch and DomainError if either input is not an equation solution.
template <class T>
Comparability comparability_check(const BasicInstance<T>& s1, const BasicInstance<T>& s2,
                                  const Tolerance& tol = {});

}  // namespace sincov
