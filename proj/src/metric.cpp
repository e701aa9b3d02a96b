#include "sincov/metric.hpp"

#include <cmath>

#include "slack.hpp"

namespace sincov {

Instance bridge(const Instance& inst) {
  std::vector<double> out;
  out.reserve(inst.entries().size());
  if (inst.mode() == Mode::additive) {
    for (double v : inst.entries()) out.push_back(std::exp(v));
    return inst.with_entries(std::move(out), Mode::multiplicative);
  }
  const std::size_t n = inst.size();
  for (std::size_t k = 0; k < n * n; ++k) {
    double v = inst.entries()[k];
    if (!(v > 0.0)) {
      throw DomainError("bridge: log of non-positive entry at (" + inst.label(k / n) + ", " +
                        inst.label(k % n) + ")");
    }
    out.push_back(std::log(v));
  }
  return inst.with_entries(std::move(out), Mode::additive);
}

template <class T>
LipschitzAudit lipschitz_audit(const BasicPotential<T>& phi, const BasicInstance<T>& inst,
                               const Tolerance& tol) {
  if (inst.mode() != Mode::additive) {
    throw UsageError("lipschitz_audit requires an additive instance");
  }
  if (!member_of(phi, inst, PotentialClass::h_class, tol)) {
    throw UsageError("lipschitz_audit: potential is not a member of the H-class");
  }
  if constexpr (!kIsExact<T>) {
    if (tol.exact) {
      BasicPotential<Rational> px;
      for (double v : phi.values) px.values.push_back(to_rational(v));
      return lipschitz_audit(px, to_exact(inst), tol);
    }
  }
  detail::Slack<T> slack(tol);
  LipschitzAudit audit;
  const std::size_t n = inst.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      T lhs = abs_value(T(phi.values[a] - phi.values[b]));
      T rhs = (inst(a, b) + inst(b, a)) / 2;
      if (auto gap = slack.excess(lhs, rhs, rhs)) {
        audit.holds = false;
        if (*gap > audit.worst_excess) {
          audit.worst_excess = *gap;
          audit.worst_pair = std::make_pair(a, b);
        }
      }
    }
  }
  return audit;
}

template <class T>
QuotientMap<T> quotient(const BasicInstance<T>& inst, const Tolerance& tol) {
  tol.check();
  if (inst.mode() != Mode::additive) throw UsageError("quotient requires an additive instance");
  if constexpr (!kIsExact<T>) {
    if (tol.exact) {
      auto q = quotient(to_exact(inst), tol);
      return {q.class_of, q.representatives, inst.restrict_to(q.representatives)};
    }
  }
  detail::Slack<T> slack(tol);
  const std::size_t n = inst.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (!slack.is_zero(inst(a, a))) {
      throw DomainError("quotient: diagonal entry at " + inst.label(a) + " is not zero");
    }
  }
  if (!satisfies(inst, Law::triangle, tol)) {
    throw DomainError("quotient: instance does not satisfy the triangle inequality");
  }

  auto same_column = [&](std::size_t a, std::size_t b) {
    for (std::size_t x = 0; x < n; ++x) {
      if (!slack.eq(inst(x, a), inst(x, b))) return false;
    }
    return true;
  };

  std::vector<std::size_t> class_of(n);
  std::vector<std::size_t> reps;
  for (std::size_t a = 0; a < n; ++a) {
    class_of[a] = a;
    for (std::size_t r : reps) {
      if (same_column(a, r)) {
        class_of[a] = r;
        break;
      }
    }
    if (class_of[a] == a) reps.push_back(a);
  }
  return {std::move(class_of), reps, inst.restrict_to(reps)};
}

template LipschitzAudit lipschitz_audit(const Potential&, const Instance&, const Tolerance&);
template LipschitzAudit lipschitz_audit(const BasicPotential<Rational>&, const ExactInstance&,
                                        const Tolerance&);
template QuotientMap<double> quotient(const Instance&, const Tolerance&);
template QuotientMap<Rational> quotient(const ExactInstance&, const Tolerance&);

}  // namespace sincov
