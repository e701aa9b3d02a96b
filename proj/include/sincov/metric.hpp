#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sincov/core.hpp"
#include "sincov/representation.hpp"

namespace sincov {

/// Additive -> multiplicative via exp, multiplicative -> additive via log.
/// Throws DomainError when taking the log of a non-positive entry.
Instance bridge(const Instance& inst);

struct LipschitzAudit {
  bool holds = true;
  /// Pair with the largest excess of |phi(a) - phi(b)| over (H(a,b) + H(b,a)) / 2.
  std::optional<std::pair<std::size_t, std::size_t>> worst_pair;
  double worst_excess = 0.0;
};

/// Checks |phi(a) - phi(b)| <= (H(a,b) + H(b,a)) / 2. Throws UsageError when
/// phi is not a member of the H-class of `inst`.
template <class T>
LipschitzAudit lipschitz_audit(const BasicPotential<T>& phi, const BasicInstance<T>& inst,
                               const Tolerance& tol = {});

template <class T>
struct QuotientMap {
  std::vector<std::size_t> class_of;       // representative index per point
  std::vector<std::size_t> representatives;  // ascending
  BasicInstance<T> reduced;

  const std::string& representative_label(const BasicInstance<T>& inst,
                                           std::size_t i) const {
    return inst.label(class_of[i]);
  }
};

/// Identifies points whose columns agree within slack; the representative is
/// the lowest index of each class. Requires a zero-diagonal solution of the
/// triangle inequality (DomainError otherwise).
template <class T>
QuotientMap<T> quotient(const BasicInstance<T>& inst, const Tolerance& tol = {});

enum class ClosureKernel { automatic, plain, blocked };

/// Min-plus (additive) or min-times (multiplicative) path closure with the
/// diagonal forced to 0 / 1 first. The blocked kernel produces bit-identical
/// output to the plain one. Throws CycleError with a witness when a cycle of
/// negative sum (product below 1) makes the closure unbounded, DomainError for
/// non-positive multiplicative input.
template <class T>
BasicInstance<T> closure(const BasicInstance<T>& inst,
                         ClosureKernel kernel = ClosureKernel::automatic,
                         std::size_t block = 64);

}  // namespace sincov
