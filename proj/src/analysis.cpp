#include "sincov/analysis.hpp"

#include <algorithm>

#include "sincov/parallel.hpp"
#include "slack.hpp"

namespace sincov {

namespace {

void require_multiplicative(Mode mode, std::string_view op) {
  if (mode != Mode::multiplicative) {
    throw UsageError(std::string(op) + " requires a multiplicative instance");
  }
}

template <class T>
void require_positive(const BasicInstance<T>& inst, std::string_view op) {
  for (std::size_t i = 0; i < inst.size(); ++i) {
    for (std::size_t j = 0; j < inst.size(); ++j) {
      if (!(inst(i, j) > 0)) {
        throw DomainError(std::string(op) + ": entry (" + inst.label(i) + ", " +
                          inst.label(j) + ") is not strictly positive");
      }
    }
  }
}

}  // namespace

template <class T>
bool has_zero_property(std::span<const T> values, const Tolerance& tol) {
  detail::Slack<T> slack(tol);
  bool neg = false, pos = false;
  for (const T& v : values) {
    if (slack.is_zero(v)) return true;
    if (v < 0) neg = true;
    if (v > 0) pos = true;
  }
  return !(neg && pos);
}

template <class T>
AuditReport audit(const BasicInstance<T>& inst, const Tolerance& tol) {
  tol.check();
  require_multiplicative(inst.mode(), "audit");
  if constexpr (!kIsExact<T>) {
    if (tol.exact) return audit(to_exact(inst), tol);
  }
  detail::Slack<T> slack(tol);
  const std::size_t n = inst.size();

  AuditReport r;
  r.not_a_solution = !satisfies(inst, Law::mult_ineq, tol);
  r.positive = true;
  r.all_zero = true;
  for (const T& v : inst.entries()) {
    if (!slack.positive(v)) {
      r.has_nonpositive = true;
      r.positive = false;
    }
    if (slack.is_zero(v)) {
      r.has_zero = true;
    } else {
      r.all_zero = false;
    }
  }
  T dmin = inst(0, 0), dmax = inst(0, 0);
  for (std::size_t i = 1; i < n; ++i) {
    dmin = std::min<T>(dmin, inst(i, i));
    dmax = std::max<T>(dmax, inst(i, i));
  }
  r.diag_min = to_double(dmin);
  r.diag_max = to_double(dmax);

  if (r.positive) {
    const T c = *std::max_element(inst.entries().begin(), inst.entries().end());
    const T lo = *std::min_element(inst.entries().begin(), inst.entries().end());
    r.bound_c = to_double(c);
    r.lower_bound_ok = slack.ge(lo, T(1) / c);

    bool ok = true;
    for (std::size_t x = 0; ok && x < n; ++x) {
      for (std::size_t y = 0; ok && y < n; ++y) {
        const T lower = T(1) / inst(y, x);
        const T& upper = inst(x, y);
        for (std::size_t a = 0; a < n; ++a) {
          const T ratio = inst(a, y) / inst(a, x);
          if (!slack.le(lower, ratio) || !slack.le(ratio, upper)) {
            ok = false;
            break;
          }
        }
      }
    }
    r.sandwich_ok = ok;
  }

  bool z_ok = true;
  std::vector<T> column(n);
  for (std::size_t i = 0; z_ok && i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) column[k] = inst(k, i);
    z_ok = has_zero_property<T>(inst.row(i), tol) &&
           has_zero_property<T>(std::span<const T>(column), tol);
  }
  r.z_property_sections = z_ok;
  return r;
}

template <class T>
BasicInstance<T> tilde(const BasicInstance<T>& inst) {
  require_multiplicative(inst.mode(), "tilde");
  require_positive(inst, "tilde");
  const std::size_t n = inst.size();
  std::vector<T> out(n * n);
  parallel_for(
      n,
      [&](std::size_t x) {
        for (std::size_t y = 0; y < n; ++y) {
          T best = inst(0, y) / inst(0, x);
          for (std::size_t a = 1; a < n; ++a) {
            T r = inst(a, y) / inst(a, x);
            if (r > best) best = r;
          }
          out[x * n + y] = best;
        }
      },
      64);
  return inst.with_entries(std::move(out));
}

template <class T>
ExtremalSolution<T> extremal_solution(const BasicInstance<T>& inst, std::size_t x0,
                                      std::size_t y0, const Tolerance& tol) {
  require_multiplicative(inst.mode(), "extremal_solution");
  require_positive(inst, "extremal_solution");
  const std::size_t n = inst.size();
  if (x0 >= n || y0 >= n) throw UsageError("extremal_solution: point out of range");
  if (!satisfies(inst, Law::mult_ineq, tol)) {
    throw DomainError("extremal_solution: instance does not satisfy mult-ineq");
  }

  std::size_t witness = 0;
  T best = inst(0, y0) / inst(0, x0);
  for (std::size_t a = 1; a < n; ++a) {
    T r = inst(a, y0) / inst(a, x0);
    if (r > best) {
      best = r;
      witness = a;
    }
  }

  // S(b,a) = G(a*,a)/G(a*,b), stored row-major as S(row=b, col=a).
  std::vector<T> out(n * n);
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t a = 0; a < n; ++a) {
      out[b * n + a] = b == a ? T(1) : T(inst(witness, a) / inst(witness, b));
    }
  }
  return {inst.with_entries(std::move(out)), witness};
}

template bool has_zero_property(std::span<const double>, const Tolerance&);
template bool has_zero_property(std::span<const Rational>, const Tolerance&);
template AuditReport audit(const Instance&, const Tolerance&);
template AuditReport audit(const ExactInstance&, const Tolerance&);
template Instance tilde(const Instance&);
template ExactInstance tilde(const ExactInstance&);
template ExtremalSolution<double> extremal_solution(const Instance&, std::size_t,
                                                    std::size_t, const Tolerance&);
template ExtremalSolution<Rational> extremal_solution(const ExactInstance&, std::size_t,
                                                      std::size_t, const Tolerance&);

}  // namespace sincov
