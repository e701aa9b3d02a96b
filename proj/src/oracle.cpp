// Brute-force claim checks. Nothing here calls into the library modules; the
// only shared piece is the Instance container.

#include <functional>
#include <sstream>

#include "sincov/genbench.hpp"

namespace sincov {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::hypothesis_not_met: return "hypothesis-not-met";
    case Verdict::violated: return "VIOLATED";
  }
  return "?";
}

const std::vector<std::string>& registered_claims() {
  static const std::vector<std::string> ids{
      "p0",   "b",    "t1-Z", "sup-i", "sup-ii", "sup-iii", "sup-iv",  "t2",    "SG",
      "repG", "repF", "repH", "Fsp",   "FZ-alt", "remark1", "cT2-a", "cT2-merge-zero"};
  return ids;
}

namespace {

using Index = std::vector<std::size_t>;

OracleResult holds(std::string detail = {}) {
  return {Verdict::holds, std::move(detail), {}};
}
OracleResult not_met(std::string detail) {
  return {Verdict::hypothesis_not_met, std::move(detail), {}};
}
OracleResult violated(std::string detail, Index witness) {
  return {Verdict::violated, std::move(detail), std::move(witness)};
}

// a <= b up to rel * max(1, |b|); exact arithmetic ignores rel.
template <class T>
struct Judge {
  double rel = 0.0;

  bool le(const T& a, const T& b) const {
    if constexpr (kIsExact<T>) {
      return a <= b;
    } else {
      double scale = std::fabs(b) > 1.0 ? std::fabs(b) : 1.0;
      return a - b <= rel * scale;
    }
  }
  bool eq(const T& a, const T& b) const { return le(a, b) && le(b, a); }
};

template <class T>
struct Ctx {
  const BasicInstance<T>& m;
  std::size_t n;
  Judge<T> hyp;   // judging hypotheses
  Judge<T> conc;  // judging conclusions

  const T& operator()(std::size_t i, std::size_t j) const { return m(i, j); }
  bool additive() const { return m.mode() == Mode::additive; }

  bool strictly_positive() const {
    for (const T& v : m.entries()) {
      if (!(v > 0)) return false;
    }
    return true;
  }
  bool nonnegative() const {
    for (const T& v : m.entries()) {
      if (v < 0) return false;
    }
    return true;
  }

  // First triple (x,y,z) where `ok` fails.
  std::optional<Index> find_triple(
      const std::function<bool(std::size_t, std::size_t, std::size_t)>& ok) const {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          if (!ok(x, y, z)) return Index{x, y, z};
    return std::nullopt;
  }

  bool mult_ineq(const Judge<T>& j) const {
    const auto& g = *this;
    return !find_triple([&](auto x, auto y, auto z) { return j.le(g(x, z), g(x, y) * g(y, z)); });
  }
  bool reverse_ineq(const Judge<T>& j) const {
    const auto& f = *this;
    return !find_triple([&](auto x, auto y, auto z) { return j.le(f(x, y) * f(y, z), f(x, z)); });
  }
  bool mult_eq(const Judge<T>& j) const {
    const auto& s = *this;
    return !find_triple([&](auto x, auto y, auto z) { return j.eq(s(x, z), s(x, y) * s(y, z)); });
  }
  bool triangle(const Judge<T>& j) const {
    const auto& h = *this;
    return !find_triple([&](auto x, auto y, auto z) { return j.le(h(x, z), h(x, y) + h(y, z)); });
  }
  bool diagonal_is(const T& v, const Judge<T>& j) const {
    for (std::size_t i = 0; i < n; ++i) {
      if (!j.eq(m(i, i), v)) return false;
    }
    return true;
  }
};

template <class T>
std::string show(const T& v) {
  if constexpr (kIsExact<T>) {
    return v.get_str();
  } else {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
  }
}

// Property (Z) on a finite list: values on both sides of 0 force a 0.
template <class T>
bool z_property(const std::vector<T>& values) {
  bool neg = false, pos = false, zero = false;
  for (const T& v : values) {
    if (v < 0) neg = true;
    if (v > 0) pos = true;
    if (v == 0) zero = true;
  }
  return zero || !(neg && pos);
}

template <class T>
std::vector<T> row_of(const Ctx<T>& c, std::size_t r) {
  std::vector<T> out;
  for (std::size_t j = 0; j < c.n; ++j) out.push_back(c(r, j));
  return out;
}

template <class T>
std::vector<T> col_of(const Ctx<T>& c, std::size_t k) {
  std::vector<T> out;
  for (std::size_t i = 0; i < c.n; ++i) out.push_back(c(i, k));
  return out;
}

void require_small(std::size_t n, std::string_view claim) {
  if (n > kOracleQuarticCap) {
    throw UsageError("oracle: claim " + std::string(claim) + " is capped at n <= " +
                     std::to_string(kOracleQuarticCap));
  }
}

// ---------------------------------------------------------------------------
// Zero-structure claims (exact instances only)

OracleResult claim_p0(const Ctx<Rational>& c) {
  if (c.additive()) return not_met("additive instance");
  if (!c.nonnegative()) return not_met("negative entry");
  bool has_zero = false;
  for (const auto& v : c.m.entries()) has_zero = has_zero || v == 0;
  if (!has_zero) return not_met("no zero entry");
  if (!c.mult_ineq(c.hyp)) return not_met("not a solution of the inequality");
  for (std::size_t a = 0; a < c.n; ++a)
    for (std::size_t b = 0; b < c.n; ++b)
      if (c(a, b) != 0) return violated("nonzero entry in a solution with a zero", {a, b});
  return holds("identically zero");
}

OracleResult claim_t1z(const Ctx<Rational>& c) {
  if (c.additive()) return not_met("additive instance");
  bool nonpositive = false;
  for (const auto& v : c.m.entries()) nonpositive = nonpositive || v <= 0;
  if (!nonpositive) return not_met("no non-positive entry");
  for (std::size_t i = 0; i < c.n; ++i) {
    if (!z_property(row_of(c, i)) || !z_property(col_of(c, i))) {
      return not_met("a section lacks property (Z)");
    }
  }
  if (!c.mult_ineq(c.hyp)) return not_met("not a solution of the inequality");
  for (std::size_t a = 0; a < c.n; ++a)
    for (std::size_t b = 0; b < c.n; ++b)
      if (c(a, b) > 0) return violated("positive entry", {a, b});
  return holds("non-positive everywhere");
}

OracleResult claim_fsp(const Ctx<Rational>& c) {
  if (c.additive()) return not_met("additive instance");
  if (!c.reverse_ineq(c.hyp)) return not_met("not a solution of the reverse inequality");
  for (std::size_t x = 0; x < c.n; ++x) {
    if (c(x, x) < 0 || c(x, x) > 1) return violated("diagonal entry outside [0,1]", {x, x});
  }
  std::vector<char> row_z(c.n), col_z(c.n);
  for (std::size_t i = 0; i < c.n; ++i) {
    row_z[i] = z_property(row_of(c, i));
    col_z[i] = z_property(col_of(c, i));
  }
  for (std::size_t x = 0; x < c.n; ++x)
    for (std::size_t y = 0; y < c.n; ++y)
      if (!row_z[x] && !col_z[y]) return holds("diagonal in [0,1]; (Z) hypothesis not met");
  for (std::size_t a = 0; a < c.n; ++a)
    for (std::size_t b = 0; b < c.n; ++b)
      if (c(a, b) < 0) return violated("negative entry under the (Z) hypothesis", {a, b});
  return holds("diagonal in [0,1]; non-negative");
}

OracleResult claim_fz_alt(const Ctx<Rational>& c) {
  if (c.additive()) return not_met("additive instance");
  if (!c.nonnegative()) return not_met("negative entry");
  if (!c.reverse_ineq(c.hyp)) return not_met("not a solution of the reverse inequality");
  const std::size_t n = c.n;
  auto z = [&](std::size_t i, std::size_t j) { return c(i, j) == 0; };
  std::size_t zeros = 0, rows = 0, cols = 0, cross = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!z(a, b)) continue;
      ++zeros;
      for (std::size_t x = 0; x < n; ++x) {
        if (!z(a, x) && !z(x, b)) return violated("alternative fails at (a,b,x)", {a, b, x});
      }
      bool row_full = true, col_full = true;
      for (std::size_t x = 0; x < n; ++x) {
        row_full = row_full && z(a, x);
        col_full = col_full && z(x, b);
      }
      if (row_full) {
        ++rows;
      } else if (col_full) {
        ++cols;
      } else {
        Index u1, u2;
        for (std::size_t x = 0; x < n; ++x) {
          if (!z(a, x)) u1.push_back(x);
          if (!z(x, b)) u2.push_back(x);
        }
        for (std::size_t x : u1)
          if (!z(x, b)) return violated("cross U1 x {b} leaves Z", {a, b, x});
        for (std::size_t x : u2)
          if (!z(a, x)) return violated("cross {a} x U2 leaves Z", {a, b, x});
        ++cross;
      }
    }
  }
  if (zeros == 0) return not_met("no zero entry");
  return holds("row=" + std::to_string(rows) + " column=" + std::to_string(cols) +
               " cross=" + std::to_string(cross));
}

// ---------------------------------------------------------------------------
// Order claims

template <class T>
std::optional<OracleResult> positive_solution(const Ctx<T>& c) {
  if (c.additive()) return not_met("additive instance");
  if (!c.strictly_positive()) return not_met("entry not strictly positive");
  if (!c.mult_ineq(c.hyp)) return not_met("not a solution of the inequality");
  return std::nullopt;
}

template <class T>
OracleResult claim_b(const Ctx<T>& c) {
  if (auto r = positive_solution(c)) return *r;
  T cmax = c(0, 0);
  for (const T& v : c.m.entries())
    if (v > cmax) cmax = v;
  for (std::size_t a = 0; a < c.n; ++a) {
    if (!c.conc.le(T(1), c(a, a))) return violated("diagonal entry below 1", {a, a});
    for (std::size_t b = 0; b < c.n; ++b) {
      if (!c.conc.le(T(1), c(a, b) * cmax)) return violated("entry below 1/c", {a, b});
    }
  }
  return holds("c=" + show(cmax));
}

// Gt(x,y) = max_a G(a,y)/G(a,x)
template <class T>
std::vector<T> sup_ratio(const Ctx<T>& c) {
  const std::size_t n = c.n;
  std::vector<T> gt(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      T best = c(0, y) / c(0, x);
      for (std::size_t a = 1; a < n; ++a) {
        T r = c(a, y) / c(a, x);
        if (r > best) best = r;
      }
      gt[x * n + y] = best;
    }
  }
  return gt;
}

template <class T>
OracleResult claim_sup(const Ctx<T>& c, int part) {
  if (auto r = positive_solution(c)) return *r;
  const std::size_t n = c.n;
  if (part == 3 && !c.diagonal_is(T(1), c.hyp)) return not_met("diagonal not identically 1");
  auto gt = sup_ratio(c);
  auto at = [&](std::size_t x, std::size_t y) -> const T& { return gt[x * n + y]; };
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      switch (part) {
        case 1:
          if (!c.conc.le(T(1) / c(y, x), at(x, y))) return violated("1/G* exceeds the sup", {x, y});
          if (!c.conc.le(at(x, y), c(x, y))) return violated("sup exceeds G", {x, y});
          break;
        case 2:
          if (x == y && !c.conc.eq(at(x, x), T(1))) return violated("sup diagonal is not 1", {x, x});
          break;
        case 3:
          if (!c.conc.eq(at(x, y), c(x, y))) return violated("sup differs from G", {x, y});
          break;
        case 4:
          for (std::size_t z = 0; z < n; ++z) {
            if (!c.conc.le(at(x, z), at(x, y) * at(y, z))) {
              return violated("sup breaks the inequality", {x, y, z});
            }
          }
          break;
      }
    }
  }
  return holds();
}

// Extremal solutions from the argmax row; shared by t2 and SG.
template <class T>
std::optional<OracleResult> check_extremal(const Ctx<T>& c, bool target_is_g) {
  const std::size_t n = c.n;
  std::vector<T> lower(n * n);  // 1/G(y,x) at (x,y)
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) lower[x * n + y] = T(1) / c(y, x);
  std::vector<char> checked(n, 0);
  std::vector<T> s(n * n);
  for (std::size_t x0 = 0; x0 < n; ++x0) {
    for (std::size_t y0 = 0; y0 < n; ++y0) {
      std::size_t star = 0;
      T best = c(0, y0) / c(0, x0);
      for (std::size_t a = 1; a < n; ++a) {
        T r = c(a, y0) / c(a, x0);
        if (r > best) {
          best = r;
          star = a;
        }
      }
      // S(b,a) = G(star,a) / G(star,b)
      const T target = target_is_g ? c(x0, y0) : best;
      if (!c.conc.eq(T(c(star, y0) / c(star, x0)), target)) {
        return violated("S(x0,y0) misses its target", {x0, y0, star});
      }
      if (checked[star]) continue;
      checked[star] = 1;
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t a = 0; a < n; ++a) s[b * n + a] = c(star, a) / c(star, b);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          const T& sxy = s[x * n + y];
          if (!c.conc.le(lower[x * n + y], sxy) || !c.conc.le(sxy, c(x, y))) {
            return violated("S leaves the band 1/G* <= S <= G", {x0, y0, x, y});
          }
          for (std::size_t z = 0; z < n; ++z) {
            if (!c.conc.eq(s[x * n + z], sxy * s[y * n + z])) {
              return violated("S does not solve the equation", {x0, y0, x, y, z});
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

template <class T>
OracleResult claim_t2(const Ctx<T>& c) {
  require_small(c.n, "t2");
  if (auto r = positive_solution(c)) return *r;
  if (!c.diagonal_is(T(1), c.hyp)) return not_met("diagonal not identically 1");
  if (auto r = check_extremal(c, true)) return *r;
  return holds();
}

template <class T>
OracleResult claim_sg(const Ctx<T>& c) {
  require_small(c.n, "SG");
  if (auto r = positive_solution(c)) return *r;
  const std::size_t n = c.n;
  std::vector<T> inv(n * n);
  for (std::size_t k = 0; k < n * n; ++k) inv[k] = T(1) / c.m.entries()[k];
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        T mid = c(a, y) * inv[a * n + x];
        if (!c.conc.le(inv[y * n + x], mid) || !c.conc.le(mid, c(x, y))) {
          return violated("row estimate fails", {a, x, y});
        }
        T mid2 = c(y, a) * inv[x * n + a];
        if (!c.conc.le(inv[x * n + y], mid2) || !c.conc.le(mid2, c(y, x))) {
          return violated("column estimate fails", {a, x, y});
        }
      }
  if (auto r = check_extremal(c, false)) return *r;
  return holds();
}

enum class Rep { g, f, h };

// Columns as potentials: in the class, and the sup/inf over them gives back
// the matrix.
template <class T>
OracleResult claim_rep(const Ctx<T>& c, Rep cls) {
  const std::size_t n = c.n;
  if (cls == Rep::h) {
    if (!c.additive()) return not_met("multiplicative instance");
    if (!c.diagonal_is(T(0), c.hyp)) return not_met("diagonal not identically 0");
    if (!c.triangle(c.hyp)) return not_met("not a solution of the triangle inequality");
  } else {
    if (c.additive()) return not_met("additive instance");
    if (!c.strictly_positive()) return not_met("entry not strictly positive");
    if (!c.diagonal_is(T(1), c.hyp)) return not_met("diagonal not identically 1");
    bool ok = cls == Rep::g ? c.mult_ineq(c.hyp) : c.reverse_ineq(c.hyp);
    if (!ok) return not_met("not a solution of the inequality");
  }
  auto value = [&](std::size_t k, std::size_t a, std::size_t b) -> T {
    return cls == Rep::h ? T(c(a, k) - c(b, k)) : T(c(a, k) / c(b, k));
  };
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        bool in = cls == Rep::f ? c.conc.le(c(a, b), value(k, a, b))
                                                 : c.conc.le(value(k, a, b), c(a, b));
        if (!in) return violated("column potential outside the class", {k, a, b});
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      T ext = value(0, a, b);
      for (std::size_t k = 1; k < n; ++k) {
        T v = value(k, a, b);
        if (cls == Rep::f ? v < ext : v > ext) ext = v;
      }
      if (!c.conc.eq(ext, c(a, b))) return violated("representation misses the entry", {a, b});
    }
  }
  return holds();
}

template <class T>
OracleResult claim_remark1(const Ctx<T>& c) {
  if (c.additive()) return not_met("additive instance");
  if (!c.strictly_positive()) return not_met("entry not strictly positive");
  if (!c.mult_eq(c.hyp)) return not_met("not a solution of the equation");
  const std::size_t n = c.n;
  using Mat = std::vector<T>;
  std::vector<std::pair<std::string, Mat>> others;
  Mat self(c.m.entries()), star(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) star[a * n + b] = c(b, a);
  others.emplace_back("itself", self);
  others.emplace_back("transpose", star);
  for (std::size_t k = 0; k < n; ++k) {
    Mat m(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) m[a * n + b] = c(a, k) / c(b, k);
    others.emplace_back("column " + std::to_string(k), std::move(m));
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (int up = 0; up < 2; ++up) {
      std::vector<T> f(n);
      for (std::size_t a = 0; a < n; ++a) f[a] = c(a, 0);
      f[k] = up ? T(f[k] * 2) : T(f[k] / 2);
      Mat m(n * n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) m[a * n + b] = f[a] / f[b];
      others.emplace_back("perturbed " + std::to_string(k), std::move(m));
    }
  }
  std::size_t comparable = 0;
  for (std::size_t i = 0; i < others.size(); ++i) {
    const Mat& o = others[i].second;
    bool below = true, above = true, equal = true;
    for (std::size_t k = 0; k < n * n; ++k) {
      below = below && c.conc.le(self[k], o[k]);
      above = above && c.conc.le(o[k], self[k]);
      equal = equal && c.conc.eq(self[k], o[k]);
    }
    if (below || above) {
      ++comparable;
      if (!equal) return violated("comparable to " + others[i].first + " but not equal", {i});
    }
  }
  return holds(std::to_string(comparable) + " of " + std::to_string(others.size()) +
               " comparisons comparable");
}

// Largest value of phi(a) - phi(b) over phi with phi(x) - phi(y) <= H(x,y):
// shortest path b -> a where stepping y -> x costs H(x,y). Bellman-Ford.
template <class T>
std::vector<T> separation_bounds(const Ctx<T>& c) {
  const std::size_t n = c.n;
  std::vector<T> d(n * n);
  for (std::size_t b = 0; b < n; ++b) {
    std::vector<T> dist(n);
    std::vector<char> seen(n, 0);
    dist[b] = 0;
    seen[b] = 1;
    for (std::size_t round = 0; round + 1 < n; ++round) {
      bool changed = false;
      for (std::size_t y = 0; y < n; ++y) {
        if (!seen[y]) continue;
        for (std::size_t x = 0; x < n; ++x) {
          T cand = dist[y] + c(x, y);
          if (!seen[x] || cand < dist[x]) {
            dist[x] = cand;
            seen[x] = 1;
            changed = true;
          }
        }
      }
      if (!changed) break;
    }
    for (std::size_t a = 0; a < n; ++a) d[a * n + b] = dist[a];
  }
  return d;  // d[a*n+b] = max phi(a) - phi(b)
}

template <class T>
std::optional<OracleResult> metric_hypothesis(const Ctx<T>& c) {
  if (!c.additive()) return not_met("multiplicative instance");
  if (!c.diagonal_is(T(0), c.hyp)) return not_met("diagonal not identically 0");
  if (!c.triangle(c.hyp)) return not_met("not a solution of the triangle inequality");
  return std::nullopt;
}

template <class T>
bool same_columns(const Ctx<T>& c, std::size_t a, std::size_t b) {
  for (std::size_t x = 0; x < c.n; ++x) {
    if (!c.conc.eq(c(x, a), c(x, b))) return false;
  }
  return true;
}

template <class T>
OracleResult claim_ct2_a(const Ctx<T>& c) {
  require_small(c.n, "cT2-a");
  if (auto r = metric_hypothesis(c)) return *r;
  const std::size_t n = c.n;
  auto d = separation_bounds(c);
  std::size_t classes = 0;
  for (std::size_t a = 0; a < n; ++a) {
    bool first = true;
    for (std::size_t b = 0; b < a && first; ++b) first = !same_columns(c, a, b);
    classes += first;
    for (std::size_t b = a + 1; b < n; ++b) {
      bool separated = !c.conc.le(d[a * n + b], T(0)) || !c.conc.le(d[b * n + a], T(0));
      if (separated == same_columns(c, a, b)) {
        return violated(separated ? "merged points are separated by the class"
                                  : "distinct classes are not separated by the class",
                        {a, b});
      }
    }
  }
  return holds(std::to_string(classes) + " classes");
}

template <class T>
OracleResult claim_ct2_merge_zero(const Ctx<T>& c) {
  if (auto r = metric_hypothesis(c)) return *r;
  std::size_t merged = 0;
  for (std::size_t a = 0; a < c.n; ++a) {
    for (std::size_t b = a + 1; b < c.n; ++b) {
      if (!same_columns(c, a, b)) continue;
      ++merged;
      if (!c.conc.eq(c(a, b), T(0)) || !c.conc.eq(c(b, a), T(0))) {
        return violated("merged pair with nonzero distance", {a, b});
      }
    }
  }
  return holds(std::to_string(merged) + " merged pairs");
}

template <class T>
OracleResult dispatch_order(const Ctx<T>& c, std::string_view claim) {
  if (claim == "b") return claim_b(c);
  if (claim == "sup-i") return claim_sup(c, 1);
  if (claim == "sup-ii") return claim_sup(c, 2);
  if (claim == "sup-iii") return claim_sup(c, 3);
  if (claim == "sup-iv") return claim_sup(c, 4);
  if (claim == "t2") return claim_t2(c);
  if (claim == "SG") return claim_sg(c);
  if (claim == "repG") return claim_rep(c, Rep::g);
  if (claim == "repF") return claim_rep(c, Rep::f);
  if (claim == "repH") return claim_rep(c, Rep::h);
  if (claim == "remark1") return claim_remark1(c);
  if (claim == "cT2-a") return claim_ct2_a(c);
  if (claim == "cT2-merge-zero") return claim_ct2_merge_zero(c);
  throw UsageError("oracle: unknown claim '" + std::string(claim) + "'");
}

OracleResult dispatch_exact(const Ctx<Rational>& c, std::string_view claim) {
  if (claim == "p0") return claim_p0(c);
  if (claim == "t1-Z") return claim_t1z(c);
  if (claim == "Fsp") return claim_fsp(c);
  return claim_fz_alt(c);
}

bool is_zero_claim(std::string_view claim) {
  return claim == "p0" || claim == "t1-Z" || claim == "Fsp" || claim == "FZ-alt";
}

}  // namespace

template <class T>
OracleResult oracle_check(const BasicInstance<T>& inst, std::string_view claim,
                          const Tolerance& tol) {
  tol.check();
  if (is_zero_claim(claim)) {
    if constexpr (kIsExact<T>) {
      return dispatch_exact(Ctx<Rational>{inst, inst.size(), {}, {}}, claim);
    } else {
      ExactInstance exact = to_exact(inst);
      return dispatch_exact(Ctx<Rational>{exact, exact.size(), {}, {}}, claim);
    }
  }
  if constexpr (!kIsExact<T>) {
    if (tol.exact) return oracle_check(to_exact(inst), claim, tol);
  }
  Ctx<T> c{inst, inst.size(), {tol.rel}, {64.0 * tol.rel}};
  return dispatch_order(c, claim);
}

template OracleResult oracle_check(const Instance&, std::string_view, const Tolerance&);
template OracleResult oracle_check(const ExactInstance&, std::string_view, const Tolerance&);

}  // namespace sincov
