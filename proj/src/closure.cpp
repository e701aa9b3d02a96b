#include <algorithm>

#include "sincov/metric.hpp"
#include "sincov/parallel.hpp"
#include "slack.hpp"

namespace sincov {

namespace {

template <class T>
struct MinPlus {
  static T identity() { return T(0); }
  static T combine(const T& a, const T& b) { return a + b; }
};

template <class T>
struct MinTimes {
  static T identity() { return T(1); }
  static T combine(const T& a, const T& b) { return a * b; }
};

// Floyd-Warshall, pivot-major.
template <class T, class Op>
void close_plain(std::vector<T>& d, std::size_t n) {
  T cand;
  for (std::size_t k = 0; k < n; ++k) {
    const T* row_k = d.data() + k * n;
    for (std::size_t i = 0; i < n; ++i) {
      T* row_i = d.data() + i * n;
      const T dik = row_i[k];
      for (std::size_t j = 0; j < n; ++j) {
        cand = Op::combine(dik, row_k[j]);
        if (cand < row_i[j]) row_i[j] = cand;
      }
    }
  }
}

// Blocked Floyd-Warshall. For each pivot block K the cross region (rows in K
// or columns in K) is advanced pivot by pivot; it only depends on itself, so
// it evolves exactly as in close_plain. The pivot row and column values seen
// at each pivot are recorded and then replayed, tile by tile, on the rest of
// the matrix. Every entry therefore receives the same candidate values in the
// same order as in close_plain.
template <class T, class Op>
void close_blocked(std::vector<T>& d, std::size_t n, std::size_t block) {
  block = std::max<std::size_t>(1, block);
  std::vector<T> col_snap, row_snap;
  T cand;
  for (std::size_t kb = 0; kb < n; kb += block) {
    const std::size_t ke = std::min(n, kb + block);
    const std::size_t width = ke - kb;
    col_snap.assign(width * n, T());
    row_snap.assign(width * n, T());

    for (std::size_t k = kb; k < ke; ++k) {
      T* col = col_snap.data() + (k - kb) * n;
      T* row = row_snap.data() + (k - kb) * n;
      for (std::size_t i = 0; i < n; ++i) col[i] = d[i * n + k];
      std::copy(d.begin() + k * n, d.begin() + (k + 1) * n, row);
      for (std::size_t i = 0; i < n; ++i) {
        T* row_i = d.data() + i * n;
        const bool in_block = i >= kb && i < ke;
        const std::size_t j0 = in_block ? 0 : kb;
        const std::size_t j1 = in_block ? n : ke;
        for (std::size_t j = j0; j < j1; ++j) {
          cand = Op::combine(col[i], row[j]);
          if (cand < row_i[j]) row_i[j] = cand;
        }
      }
    }

    // Remaining tiles, rows and columns outside K.
    std::vector<std::size_t> tile_rows;
    for (std::size_t ib = 0; ib < n; ib += block) {
      if (ib != kb) tile_rows.push_back(ib);
    }
    parallel_for(
        tile_rows.size(),
        [&](std::size_t t) {
          T c;
          const std::size_t ib = tile_rows[t];
          const std::size_t ie = std::min(n, ib + block);
          for (std::size_t jb = 0; jb < n; jb += block) {
            if (jb == kb) continue;
            const std::size_t je = std::min(n, jb + block);
            for (std::size_t k = 0; k < width; ++k) {
              const T* col = col_snap.data() + k * n;
              const T* row = row_snap.data() + k * n;
              for (std::size_t i = ib; i < ie; ++i) {
                T* row_i = d.data() + i * n;
                const T& cik = col[i];
                for (std::size_t j = jb; j < je; ++j) {
                  c = Op::combine(cik, row[j]);
                  if (c < row_i[j]) row_i[j] = c;
                }
              }
            }
          }
        },
        n >= 256 ? 2 : tile_rows.size() + 1);
  }
}

// Bellman-Ford from `source` over the complete digraph with weights w. Returns
// a cycle (first vertex repeated at the end) that keeps relaxing after n-1
// rounds, or an empty vector.
template <class T, class Op>
std::vector<std::size_t> find_cycle(const std::vector<T>& w, std::size_t n,
                                    std::size_t source, const T& id) {
  std::vector<T> dist(n);
  std::vector<char> reached(n, 0);
  std::vector<std::size_t> pred(n, n);
  dist[source] = id;
  reached[source] = 1;
  std::size_t last = n;
  for (std::size_t round = 0; round < n; ++round) {
    last = n;
    for (std::size_t u = 0; u < n; ++u) {
      if (!reached[u]) continue;
      for (std::size_t v = 0; v < n; ++v) {
        if (u == v) continue;
        T cand = Op::combine(dist[u], w[u * n + v]);
        if (!reached[v] || cand < dist[v]) {
          dist[v] = cand;
          reached[v] = 1;
          pred[v] = u;
          last = v;
        }
      }
    }
    if (last == n) return {};
  }
  std::size_t x = last;
  for (std::size_t i = 0; i < n && x < n; ++i) x = pred[x];
  if (x >= n) return {};
  std::vector<std::size_t> cycle{x};
  for (std::size_t v = pred[x]; v != x; v = pred[v]) cycle.push_back(v);
  cycle.push_back(x);
  std::reverse(cycle.begin(), cycle.end());
  return cycle;
}

template <class T>
Rational exact_cycle_weight(const std::vector<T>& w, std::size_t n,
                            const std::vector<std::size_t>& cycle, Mode mode) {
  Rational total = mode == Mode::additive ? 0 : 1;
  for (std::size_t i = 0; i + 1 < cycle.size(); ++i) {
    Rational e;
    if constexpr (kIsExact<T>) {
      e = w[cycle[i] * n + cycle[i + 1]];
    } else {
      e = to_rational(w[cycle[i] * n + cycle[i + 1]]);
    }
    if (mode == Mode::additive) {
      total += e;
    } else {
      total *= e;
    }
  }
  return total;
}

template <class T, class Op>
void run_kernel(std::vector<T>& d, std::size_t n, ClosureKernel kernel, std::size_t block) {
  if (kernel == ClosureKernel::automatic) {
    kernel = n >= 256 ? ClosureKernel::blocked : ClosureKernel::plain;
  }
  auto pass = [&] {
    if (kernel == ClosureKernel::plain) {
      close_plain<T, Op>(d, n);
    } else {
      close_blocked<T, Op>(d, n, block);
    }
  };
  pass();
  if constexpr (!kIsExact<T>) {
    // Rounded sums can still improve on a second pass; repeat until a pass
    // changes nothing, so that the output is its own closure.
    for (std::size_t i = 0; i < n; ++i) {
      if (d[i * n + i] < Op::identity()) return;  // cycle; reported by the caller
    }
    std::vector<T> prev;
    for (std::size_t round = 0; round < n && prev != d; ++round) {
      prev = d;
      pass();
    }
  }
}

template <class T, class Op>
std::vector<std::size_t> witness_cycle(const std::vector<T>& w, std::size_t n,
                                       std::size_t source, Mode mode) {
  const Rational id = mode == Mode::additive ? 0 : 1;
  auto cycle = find_cycle<T, Op>(w, n, source, detail::identity<T>(mode));
  if (!cycle.empty() && exact_cycle_weight(w, n, cycle, mode) < id) return cycle;
  if constexpr (!kIsExact<T>) {
    // Rounding can hide or fake a cycle in floating point; decide exactly.
    if (n <= 128) {
      std::vector<Rational> wx;
      wx.reserve(w.size());
      for (double v : w) wx.push_back(to_rational(v));
      using ExactOp = std::conditional_t<std::is_same_v<Op, MinPlus<T>>, MinPlus<Rational>,
                                         MinTimes<Rational>>;
      // Every vertex is reachable in the complete digraph, so one source suffices.
      return find_cycle<Rational, ExactOp>(wx, n, source, id);
    }
  }
  return {};
}

template <class T, class Op>
BasicInstance<T> close(const BasicInstance<T>& inst, ClosureKernel kernel, std::size_t block) {
  const std::size_t n = inst.size();
  const Mode mode = inst.mode();
  const T id = detail::identity<T>(mode);
  std::vector<T> w = inst.entries();
  for (std::size_t i = 0; i < n; ++i) w[i * n + i] = id;

  std::vector<T> d = w;
  run_kernel<T, Op>(d, n, kernel, block);

  for (std::size_t i = 0; i < n; ++i) {
    if (!(d[i * n + i] < id)) continue;
    auto cycle = witness_cycle<T, Op>(w, n, i, mode);
    if (!cycle.empty()) {
      Rational weight = exact_cycle_weight(w, n, cycle, mode);
      throw CycleError(mode == Mode::additive ? "closure: cycle with negative sum"
                                              : "closure: cycle with product below 1",
                       std::move(cycle), format_rational(weight));
    }
    if constexpr (kIsExact<T>) {
      throw std::logic_error("closure: negative diagonal without a witness cycle");
    }
    break;
  }
  // Zero-weight cycles can leave a rounding residue on the diagonal.
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i * n + i] < id) d[i * n + i] = id;
  }
  return inst.with_entries(std::move(d));
}

}  // namespace

template <class T>
BasicInstance<T> closure(const BasicInstance<T>& inst, ClosureKernel kernel, std::size_t block) {
  if (inst.mode() == Mode::additive) return close<T, MinPlus<T>>(inst, kernel, block);
  for (const T& v : inst.entries()) {
    if (!(v > 0)) throw DomainError("closure: multiplicative entries must be strictly positive");
  }
  return close<T, MinTimes<T>>(inst, kernel, block);
}

template Instance closure(const Instance&, ClosureKernel, std::size_t);
template ExactInstance closure(const ExactInstance&, ClosureKernel, std::size_t);

}  // namespace sincov
