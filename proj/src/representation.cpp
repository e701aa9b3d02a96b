#include "sincov/representation.hpp"

#include "slack.hpp"

namespace sincov {

PotentialClass parse_potential_class(std::string_view text) {
  if (text == "G-class" || text == "G") return PotentialClass::g_class;
  if (text == "F-class" || text == "F") return PotentialClass::f_class;
  if (text == "H-class" || text == "H") return PotentialClass::h_class;
  throw UsageError("unknown potential class '" + std::string(text) + "'");
}

Direction parse_direction(std::string_view text) {
  if (text == "sup") return Direction::sup;
  if (text == "inf") return Direction::inf;
  throw UsageError("unknown direction '" + std::string(text) + "'");
}

std::string_view to_string(Comparability c) {
  switch (c) {
    case Comparability::equal: return "equal";
    case Comparability::incomparable: return "incomparable";
    case Comparability::violation: return "violation";
  }
  return "?";
}

namespace {

template <class T>
void require_nonzero_members(const std::vector<T>& values, std::string_view op) {
  for (const T& v : values) {
    if (!(v > 0)) throw DomainError(std::string(op) + ": potential must be strictly positive");
  }
}

template <class T>
bool ratio_matches(const BasicInstance<T>& s, const std::vector<T>& f,
                   const detail::Slack<T>& slack) {
  const std::size_t n = s.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!slack.eq(T(s(a, b) * f[b]), f[a])) return false;
    }
  }
  return true;
}

}  // namespace

template <class T>
bool member_of(const BasicPotential<T>& f, const BasicInstance<T>& inst,
               PotentialClass cls, const Tolerance& tol) {
  tol.check();
  const Mode want = cls == PotentialClass::h_class ? Mode::additive : Mode::multiplicative;
  if (inst.mode() != want) throw UsageError("member_of: class does not match instance mode");
  if (f.values.size() != inst.size()) throw UsageError("member_of: potential length mismatch");
  if (want == Mode::multiplicative) require_nonzero_members(f.values, "member_of");
  if constexpr (!kIsExact<T>) {
    if (tol.exact) {
      BasicPotential<Rational> fx;
      for (double v : f.values) fx.values.push_back(to_rational(v));
      return member_of(fx, to_exact(inst), cls, tol);
    }
  }
  detail::Slack<T> slack(tol);
  const std::size_t n = inst.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const T& bound = inst(x, y);
      switch (cls) {
        case PotentialClass::g_class:
          if (!slack.le(T(f.values[x] / f.values[y]), bound)) return false;
          break;
        case PotentialClass::f_class:
          if (!slack.ge(T(f.values[x] / f.values[y]), bound)) return false;
          break;
        case PotentialClass::h_class:
          if (!slack.le(T(f.values[x] - f.values[y]), bound)) return false;
          break;
      }
    }
  }
  return true;
}

template <class T>
BasicPotentialFamily<T> canonical_family(const BasicInstance<T>& inst, const Tolerance& tol) {
  const std::size_t n = inst.size();
  if (inst.mode() == Mode::multiplicative) {
    for (const T& v : inst.entries()) {
      if (!(v > 0)) throw DomainError("canonical_family: entries must be strictly positive");
    }
    if (!satisfies(inst, Law::mult_ineq, tol)) {
      throw DomainError("canonical_family: instance does not satisfy mult-ineq");
    }
  } else if (!satisfies(inst, Law::triangle, tol)) {
    throw DomainError("canonical_family: instance does not satisfy the triangle inequality");
  }
  BasicPotentialFamily<T> family{inst.labels(), inst.mode(), {}};
  family.members.reserve(n);
  for (std::size_t c = 0; c < n; ++c) {
    BasicPotential<T> f;
    f.values.reserve(n);
    for (std::size_t x = 0; x < n; ++x) f.values.push_back(inst(x, c));
    family.members.push_back(std::move(f));
  }
  return family;
}

template <class T>
BasicInstance<T> reconstruct(const BasicPotentialFamily<T>& family, Direction dir) {
  if (family.members.empty()) throw UsageError("reconstruct: empty family");
  const std::size_t n = family.labels.size();
  const bool additive = family.mode == Mode::additive;
  if (additive && dir == Direction::inf) {
    throw UsageError("reconstruct: additive families support sup only");
  }
  for (const auto& f : family.members) {
    if (f.values.size() != n) throw UsageError("reconstruct: potential length mismatch");
    if (!additive) require_nonzero_members(f.values, "reconstruct");
  }

  std::vector<T> out(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      T best{};
      bool first = true;
      for (const auto& f : family.members) {
        T v = additive ? T(f.values[a] - f.values[b]) : T(f.values[a] / f.values[b]);
        if (first || (dir == Direction::sup ? v > best : v < best)) {
          best = std::move(v);
          first = false;
        }
      }
      out[a * n + b] = std::move(best);
    }
  }
  return BasicInstance<T>(family.labels, std::move(out), family.mode);
}

template <class T>
EquationSolution<T> solve_equation(const BasicInstance<T>& inst, const Tolerance& tol) {
  tol.check();
  if (inst.mode() != Mode::multiplicative) {
    throw UsageError("solve_equation requires a multiplicative instance");
  }
  detail::Slack<T> slack(tol);
  const std::size_t n = inst.size();
  EquationSolution<T> result;

  bool all_zero = true;
  for (const T& v : inst.entries()) {
    if (!slack.is_zero(v)) {
      all_zero = false;
      break;
    }
  }
  if (all_zero) {
    result.kind = EquationSolution<T>::Kind::zero;
    return result;
  }

  std::vector<T> f(n);
  for (std::size_t x = 0; x < n; ++x) {
    f[x] = inst(x, 0);
    if (slack.is_zero(f[x])) return result;
  }
  bool ok;
  if constexpr (!kIsExact<T>) {
    if (tol.exact) {
      ExactInstance ex = to_exact(inst);
      std::vector<Rational> fx;
      for (double v : f) fx.push_back(to_rational(v));
      ok = ratio_matches(ex, fx, detail::Slack<Rational>(tol));
    } else {
      ok = ratio_matches(inst, f, slack);
    }
  } else {
    ok = ratio_matches(inst, f, slack);
  }
  if (!ok) return result;
  result.kind = EquationSolution<T>::Kind::potential;
  result.potential.values = std::move(f);
  return result;
}

template <class T>
Comparability comparability_check(const BasicInstance<T>& s1, const BasicInstance<T>& s2,
                                  const Tolerance& tol) {
  if (s1.labels() != s2.labels()) throw UsageError("comparability_check: label mismatch");
  if (!satisfies(s1, Law::mult_eq, tol) || !satisfies(s2, Law::mult_eq, tol)) {
    throw DomainError("comparability_check: inputs must solve Sincov's equation");
  }
  if constexpr (!kIsExact<T>) {
    if (tol.exact) return comparability_check(to_exact(s1), to_exact(s2), tol);
  }
  detail::Slack<T> slack(tol);
  bool le12 = true, le21 = true;
  for (std::size_t k = 0; k < s1.entries().size(); ++k) {
    const T& a = s1.entries()[k];
    const T& b = s2.entries()[k];
    if (!slack.le(a, b)) le12 = false;
    if (!slack.le(b, a)) le21 = false;
  }
  if (le12 && le21) return Comparability::equal;
  if (le12 || le21) return Comparability::violation;
  return Comparability::incomparable;
}

#define SINCOV_INSTANTIATE(T)                                                          \
  template bool member_of(const BasicPotential<T>&, const BasicInstance<T>&,           \
                          PotentialClass, const Tolerance&);                           \
  template BasicPotentialFamily<T> canonical_family(const BasicInstance<T>&,           \
                                                    const Tolerance&);                 \
  template BasicInstance<T> reconstruct(const BasicPotentialFamily<T>&, Direction);    \
  template EquationSolution<T> solve_equation(const BasicInstance<T>&, const Tolerance&); \
  template Comparability comparability_check(const BasicInstance<T>&,                  \
                                             const BasicInstance<T>&, const Tolerance&);

SINCOV_INSTANTIATE(double)
SINCOV_INSTANTIATE(Rational)

#undef SINCOV_INSTANTIATE

}  // namespace sincov
