#include "sincov/reverse.hpp"

#include "sincov/analysis.hpp"
#include "slack.hpp"

namespace sincov {

std::string_view to_string(FZKind kind) {
  switch (kind) {
    case FZKind::row_contained: return "RowContained";
    case FZKind::column_contained: return "ColumnContained";
    case FZKind::cross: return "Cross";
    case FZKind::alternative_violated: return "AlternativeViolated";
  }
  return "?";
}

namespace {

void require_multiplicative(Mode mode, std::string_view op) {
  if (mode != Mode::multiplicative) {
    throw UsageError(std::string(op) + " requires a multiplicative instance");
  }
}

}  // namespace

template <class T>
BasicInstance<T> invert(const BasicInstance<T>& inst, const Tolerance& tol) {
  tol.check();
  require_multiplicative(inst.mode(), "invert");
  detail::Slack<T> slack(tol);
  std::vector<T> out;
  out.reserve(inst.entries().size());
  const std::size_t n = inst.size();
  for (std::size_t k = 0; k < n * n; ++k) {
    const T& v = inst.entries()[k];
    if (!slack.positive(v)) {
      throw DomainError("invert: entry (" + inst.label(k / n) + ", " + inst.label(k % n) +
                        ") is not strictly positive");
    }
    out.push_back(T(1) / v);
  }
  return inst.with_entries(std::move(out));
}

template <class T>
FspReport fsp_audit(const BasicInstance<T>& inst, const Tolerance& tol) {
  tol.check();
  require_multiplicative(inst.mode(), "fsp_audit");
  if constexpr (!kIsExact<T>) {
    if (tol.exact) return fsp_audit(to_exact(inst), tol);
  }
  detail::Slack<T> slack(tol);
  const std::size_t n = inst.size();
  FspReport r;
  r.passes_reverse = satisfies(inst, Law::reverse_ineq, tol);

  r.diag_in_unit_interval = true;
  for (std::size_t x = 0; x < n; ++x) {
    const T& d = inst(x, x);
    if (slack.negative(d) || !slack.le(d, T(1))) r.diag_in_unit_interval = false;
  }

  std::vector<bool> row_z(n), col_z(n);
  std::vector<T> column(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) column[k] = inst(k, i);
    row_z[i] = has_zero_property<T>(inst.row(i), tol);
    col_z[i] = has_zero_property<T>(std::span<const T>(column), tol);
  }
  r.z_hypothesis = true;
  for (std::size_t x = 0; x < n && r.z_hypothesis; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!row_z[x] && !col_z[y]) {
        r.z_hypothesis = false;
        break;
      }
    }
  }

  r.nonnegative = true;
  for (const T& v : inst.entries()) {
    if (slack.negative(v)) r.nonnegative = false;
  }
  r.theorem_violation = r.passes_reverse && r.z_hypothesis && !r.nonnegative;
  return r;
}

template <class T>
ZeroSet zero_set(const BasicInstance<T>& inst, const Tolerance& tol) {
  if constexpr (!kIsExact<T>) {
    if (tol.exact) return zero_set(to_exact(inst), tol);
  }
  detail::Slack<T> slack(tol);
  const std::size_t n = inst.size();
  ZeroSet z;
  z.row_view.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (slack.is_zero(inst(x, y))) {
        z.pairs.emplace_back(x, y);
        z.row_view[x].push_back(y);
      }
    }
  }
  return z;
}

template <class T>
ZeroStructure zero_structure(const BasicInstance<T>& inst, const Tolerance& tol) {
  tol.check();
  require_multiplicative(inst.mode(), "zero_structure");
  if constexpr (!kIsExact<T>) {
    if (tol.exact) return zero_structure(to_exact(inst), tol);
  }
  detail::Slack<T> slack(tol);
  const std::size_t n = inst.size();
  for (std::size_t k = 0; k < n * n; ++k) {
    if (slack.negative(inst.entries()[k])) {
      throw DomainError("zero_structure: entry (" + inst.label(k / n) + ", " +
                        inst.label(k % n) + ") is negative");
    }
  }

  ZeroStructure s;
  s.zeros = zero_set(inst, tol);
  std::vector<char> zero(n * n, 0);
  for (auto [x, y] : s.zeros.pairs) zero[x * n + y] = 1;
  auto is_zero = [&](std::size_t x, std::size_t y) { return zero[x * n + y] != 0; };

  std::vector<char> row_full(n, 1), col_full(n, 1);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!is_zero(x, y)) {
        row_full[x] = 0;
        col_full[y] = 0;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    s.full_zero_rows += row_full[i];
    s.full_zero_columns += col_full[i];
  }

  for (auto [a, b] : s.zeros.pairs) {
    FZOutcome out;
    out.a = a;
    out.b = b;
    for (std::size_t x = 0; x < n; ++x) {
      if (!is_zero(a, x) && !is_zero(x, b)) {
        out.witness = x;
        break;
      }
    }
    if (out.witness) {
      out.kind = FZKind::alternative_violated;
      ++s.violated_count;
    } else if (row_full[a]) {
      out.kind = FZKind::row_contained;
    } else if (col_full[b]) {
      out.kind = FZKind::column_contained;
    } else {
      out.kind = FZKind::cross;
      for (std::size_t x = 0; x < n; ++x) {
        if (!is_zero(a, x)) out.u1.push_back(x);
        if (!is_zero(x, b)) out.u2.push_back(x);
      }
      // The alternative puts U1 x {b} and {a} x U2 inside Z.
      for (std::size_t x : out.u1) {
        if (!is_zero(x, b)) throw std::logic_error("zero_structure: cross check failed");
      }
      for (std::size_t x : out.u2) {
        if (!is_zero(a, x)) throw std::logic_error("zero_structure: cross check failed");
      }
      ++s.cross_count;
    }
    s.outcomes.push_back(std::move(out));
  }
  return s;
}

#define SINCOV_INSTANTIATE(T)                                                     \
  template BasicInstance<T> invert(const BasicInstance<T>&, const Tolerance&);    \
  template FspReport fsp_audit(const BasicInstance<T>&, const Tolerance&);        \
  template ZeroSet zero_set(const BasicInstance<T>&, const Tolerance&);           \
  template ZeroStructure zero_structure(const BasicInstance<T>&, const Tolerance&);

SINCOV_INSTANTIATE(double)
SINCOV_INSTANTIATE(Rational)

#undef SINCOV_INSTANTIATE

}  // namespace sincov
