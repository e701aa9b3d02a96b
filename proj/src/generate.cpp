#include <cmath>

#include "sincov/genbench.hpp"
#include "sincov/metric.hpp"
#include "sincov/representation.hpp"

namespace sincov {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

std::string_view to_string(GenKind kind) {
  switch (kind) {
    case GenKind::ratio: return "ratio";
    case GenKind::bounded: return "bounded";
    case GenKind::component: return "component";
    case GenKind::via_closure: return "via-closure";
    case GenKind::reverse_f3: return "reverse-f3";
    case GenKind::additive_potential: return "additive-potential";
  }
  return "?";
}

const std::vector<GenKind>& all_gen_kinds() {
  static const std::vector<GenKind> kinds{GenKind::ratio,       GenKind::bounded,
                                          GenKind::component,   GenKind::via_closure,
                                          GenKind::reverse_f3,  GenKind::additive_potential};
  return kinds;
}

GenKind parse_gen_kind(std::string_view text) {
  for (GenKind k : all_gen_kinds()) {
    if (to_string(k) == text) return k;
  }
  throw UsageError("unknown generator kind '" + std::string(text) + "'");
}

Law advertised_law(GenKind kind) {
  switch (kind) {
    case GenKind::ratio: return Law::mult_eq;
    case GenKind::bounded:
    case GenKind::component:
    case GenKind::via_closure: return Law::mult_ineq;
    case GenKind::reverse_f3: return Law::reverse_ineq;
    case GenKind::additive_potential: return Law::triangle;
  }
  return Law::mult_ineq;
}

namespace {

template <class T>
T fraction(std::int64_t num, std::int64_t den) {
  if constexpr (kIsExact<T>) {
    Rational q{mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))};
    q.canonicalize();
    return q;
  } else {
    return static_cast<double>(num) / static_cast<double>(den);
  }
}

// Log-uniform on [e^-3, e^3], as a numerator over 1024.
std::int64_t potential_numerator(Rng& rng) {
  return std::llround(std::exp(6.0 * rng.unit() - 3.0) * 1024.0);
}

std::size_t resolve_size(const GenSpec& spec, std::size_t from_params) {
  if (spec.n == 0 && from_params == 0) throw UsageError("generate: n must be at least 1");
  if (spec.n != 0 && from_params != 0 && spec.n != from_params) {
    throw UsageError("generate: n disagrees with the size of the kind parameters");
  }
  return spec.n != 0 ? spec.n : from_params;
}

template <class T>
BasicInstance<T> make(std::size_t n, std::vector<T> entries, Mode mode = Mode::multiplicative) {
  return BasicInstance<T>(index_labels(n), std::move(entries), mode);
}

template <class T>
BasicInstance<T> gen_ratio(const GenSpec& spec, Rng& rng) {
  const auto& given = spec.params.potential;
  const std::size_t n = resolve_size(spec, given.size());
  std::vector<T> f(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!given.empty()) {
      if (!(given[i] > 0.0) || !std::isfinite(given[i])) {
        throw UsageError("generate: ratio potential must be positive and finite");
      }
      f[i] = from_double<T>(given[i]);
    } else {
      f[i] = fraction<T>(potential_numerator(rng), 1024);
    }
  }
  std::vector<T> e(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) e[a * n + b] = a == b ? T(1) : T(f[a] / f[b]);
  }
  return make<T>(n, std::move(e));
}

template <class T>
BasicInstance<T> gen_bounded(const GenSpec& spec, Rng& rng) {
  const double c_in = spec.params.c.value_or(2.0);
  if (!(c_in >= 1.0) || !std::isfinite(c_in)) throw UsageError("generate: bounded needs c >= 1");
  const std::size_t n = resolve_size(spec, 0);
  const T c = from_double<T>(c_in);
  const T lo = c, hi = c * c, width = hi - lo;
  std::vector<T> e(n * n);
  for (T& v : e) {
    const auto k = static_cast<std::int64_t>(rng.below(1025));
    v = lo + width * fraction<T>(k, 1024);
    if (v < lo) v = lo;
    if (v > hi) v = hi;
  }
  return make<T>(n, std::move(e));
}

template <class T>
BasicInstance<T> gen_component(const GenSpec& spec, Rng& rng) {
  const std::size_t n = resolve_size(spec, spec.params.partition.size());
  std::vector<std::size_t> block = spec.params.partition;
  if (block.empty()) {
    const std::uint64_t blocks = 1 + rng.below(std::min<std::size_t>(n, 3));
    block.resize(n);
    for (auto& b : block) b = rng.below(blocks);
  }
  std::vector<T> e(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) e[a * n + b] = block[a] == block[b] ? T(1) : T(-1);
  }
  return make<T>(n, std::move(e));
}

template <class T>
BasicInstance<T> gen_reverse_f3(const GenSpec& spec, Rng& rng) {
  const auto& given = spec.params.grid;
  const std::size_t n = resolve_size(spec, given.size());
  std::vector<T> g(n);
  if (!given.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!(given[i] >= 1.0) || !std::isfinite(given[i])) {
        throw UsageError("generate: reverse-f3 grid points must be >= 1");
      }
      g[i] = from_double<T>(given[i]);
    }
  } else {
    // Starts at 1 three times out of four, so zero rows are common.
    std::int64_t eighths = 8;
    if (rng.below(4) == 0) eighths += 1 + static_cast<std::int64_t>(rng.below(16));
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0) eighths += 1 + static_cast<std::int64_t>(rng.below(16));
      g[i] = fraction<T>(eighths, 8);
    }
  }
  std::vector<T> e(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) e[a * n + b] = (g[a] - T(1)) / g[b];
  }
  return make<T>(n, std::move(e));
}

template <class T>
BasicInstance<T> gen_additive(const GenSpec& spec, Rng& rng) {
  const std::size_t n = resolve_size(spec, 0);
  const std::size_t m = spec.params.family_size.value_or(1 + rng.below(n + 2));
  if (m == 0) throw UsageError("generate: family_size must be at least 1");
  BasicPotentialFamily<T> family{index_labels(n), Mode::additive, {}};
  for (std::size_t j = 0; j < m; ++j) {
    BasicPotential<T> phi;
    for (std::size_t i = 0; i < n; ++i) {
      phi.values.push_back(fraction<T>(static_cast<std::int64_t>(rng.below(385)) - 192, 64));
    }
    family.members.push_back(std::move(phi));
  }
  return reconstruct(family, Direction::sup);
}

}  // namespace

template <class T>
BasicInstance<T> closure_input(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw UsageError("closure_input: n must be at least 1");
  Rng rng(seed);
  std::vector<T> p(n);
  for (auto& v : p) v = fraction<T>(potential_numerator(rng), 1024);
  std::vector<T> e(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) {
        e[a * n + b] = T(1);
        continue;
      }
      // u(a,b) in [1 + 1/1024, e^2]: every cycle product exceeds 1 with room
      // to spare for rounding.
      std::int64_t u = std::llround(std::exp(2.0 * rng.unit()) * 1024.0);
      if (u < 1025) u = 1025;
      e[a * n + b] = p[a] / p[b] * fraction<T>(u, 1024);
    }
  }
  return make<T>(n, std::move(e));
}

template <class T>
BasicInstance<T> generate(const GenSpec& spec) {
  Rng rng(spec.seed);
  switch (spec.kind) {
    case GenKind::ratio: return gen_ratio<T>(spec, rng);
    case GenKind::bounded: return gen_bounded<T>(spec, rng);
    case GenKind::component: return gen_component<T>(spec, rng);
    case GenKind::via_closure:
      return closure(closure_input<T>(resolve_size(spec, 0), spec.seed), ClosureKernel::plain);
    case GenKind::reverse_f3: return gen_reverse_f3<T>(spec, rng);
    case GenKind::additive_potential: return gen_additive<T>(spec, rng);
  }
  throw UsageError("generate: unknown kind");
}

template Instance generate(const GenSpec&);
template ExactInstance generate(const GenSpec&);
template Instance closure_input(std::size_t, std::uint64_t);
template ExactInstance closure_input(std::size_t, std::uint64_t);

}  // namespace sincov
