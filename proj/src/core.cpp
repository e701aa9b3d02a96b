#include "sincov/core.hpp"

#include <algorithm>

#include "sincov/parallel.hpp"
#include "slack.hpp"

namespace sincov {

std::string_view to_string(Law law) {
  switch (law) {
    case Law::mult_eq: return "mult-eq";
    case Law::mult_ineq: return "mult-ineq";
    case Law::reverse_ineq: return "reverse-ineq";
    case Law::triangle: return "triangle";
  }
  return "?";
}

Law parse_law(std::string_view text) {
  if (text == "mult-eq") return Law::mult_eq;
  if (text == "mult-ineq") return Law::mult_ineq;
  if (text == "reverse-ineq") return Law::reverse_ineq;
  if (text == "triangle") return Law::triangle;
  throw UsageError("unknown law '" + std::string(text) + "'");
}

Mode required_mode(Law law) {
  return law == Law::triangle ? Mode::additive : Mode::multiplicative;
}

namespace {

template <class T>
struct TripleCheck {
  Law law;
  detail::Slack<T> slack;

  // Returns the violation gap for (x,y,z), if any.
  std::optional<double> operator()(const T& xy, const T& yz, const T& xz,
                                   T& rhs) const {
    switch (law) {
      case Law::triangle: {
        rhs = xy + yz;
        T scale = abs_value(xy) + abs_value(yz);
        return slack.excess(xz, rhs, scale);
      }
      case Law::mult_ineq:
        rhs = xy * yz;
        return slack.excess(xz, rhs, rhs);
      case Law::reverse_ineq:
        rhs = xy * yz;
        return slack.excess(rhs, xz, rhs);
      case Law::mult_eq:
        rhs = xy * yz;
        if (auto g = slack.excess(xz, rhs, rhs)) return g;
        return slack.excess(rhs, xz, rhs);
    }
    return std::nullopt;
  }
};

void check_mode(Mode mode, Law law) {
  if (mode != required_mode(law)) {
    throw UsageError("law " + std::string(to_string(law)) + " requires " +
                     std::string(to_string(required_mode(law))) + " mode, instance is " +
                     std::string(to_string(mode)));
  }
}

}  // namespace

template <class T>
ViolationReport validate(const BasicInstance<T>& inst, Law law,
                         const Tolerance& tol, std::size_t max_violations) {
  tol.check();
  check_mode(inst.mode(), law);
  if (max_violations == 0) throw UsageError("max_violations must be at least 1");
  if constexpr (!kIsExact<T>) {
    if (tol.exact) return validate(to_exact(inst), law, tol, max_violations);
  }

  const std::size_t n = inst.size();
  TripleCheck<T> check{law, detail::Slack<T>(tol)};

  struct Partial {
    std::vector<Violation> found;
    std::size_t total = 0;
  };
  std::vector<Partial> per_x(n);
  parallel_for(
      n,
      [&](std::size_t x) {
        Partial& part = per_x[x];
        T rhs;
        for (std::size_t y = 0; y < n; ++y) {
          const T& xy = inst(x, y);
          for (std::size_t z = 0; z < n; ++z) {
            if (auto gap = check(xy, inst(y, z), inst(x, z), rhs)) {
              ++part.total;
              if (part.found.size() < max_violations) {
                part.found.push_back({x, y, z, to_double(inst(x, z)), to_double(rhs), *gap});
              }
            }
          }
        }
      },
      n >= 48 ? 2 : n + 1);

  ViolationReport report;
  report.law = law;
  report.checked_triples = n * n * n;
  for (auto& part : per_x) {
    report.total_violations += part.total;
    for (auto& v : part.found) {
      if (report.violations.size() >= max_violations) break;
      report.violations.push_back(v);
    }
  }
  report.pass = report.total_violations == 0;
  return report;
}

template <class T>
bool satisfies(const BasicInstance<T>& inst, Law law, const Tolerance& tol) {
  tol.check();
  check_mode(inst.mode(), law);
  if constexpr (!kIsExact<T>) {
    if (tol.exact) return satisfies(to_exact(inst), law, tol);
  }
  const std::size_t n = inst.size();
  TripleCheck<T> check{law, detail::Slack<T>(tol)};
  T rhs;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const T& xy = inst(x, y);
      for (std::size_t z = 0; z < n; ++z) {
        if (check(xy, inst(y, z), inst(x, z), rhs)) return false;
      }
    }
  }
  return true;
}

template <class T>
BasicInstance<T> dual(const BasicInstance<T>& inst) {
  const std::size_t n = inst.size();
  std::vector<T> entries(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) entries[x * n + y] = inst(y, x);
  }
  return inst.with_entries(std::move(entries));
}

template ViolationReport validate(const Instance&, Law, const Tolerance&, std::size_t);
template ViolationReport validate(const ExactInstance&, Law, const Tolerance&, std::size_t);
template bool satisfies(const Instance&, Law, const Tolerance&);
template bool satisfies(const ExactInstance&, Law, const Tolerance&);
template Instance dual(const Instance&);
template ExactInstance dual(const ExactInstance&);

}  // namespace sincov
