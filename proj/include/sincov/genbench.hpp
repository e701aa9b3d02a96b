#pragma once

// Seeded instance generators, brute-force theorem oracles, and the closure
// benchmark harness.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "sincov/core.hpp"

namespace sincov {

/// mt19937_64 with distribution code written out here, so a seed gives the
/// same stream on every platform (std distributions are implementation
/// defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

enum class GenKind { ratio, bounded, component, via_closure, reverse_f3, additive_potential };

std::string_view to_string(GenKind kind);
GenKind parse_gen_kind(std::string_view text);
const std::vector<GenKind>& all_gen_kinds();

/// The law every instance of this kind satisfies.
Law advertised_law(GenKind kind);

struct GenParams {
  std::optional<double> c;                // bounded: entries in [c, c^2], c >= 1
  std::vector<std::size_t> partition;     // component: block id per point
  std::vector<double> grid;               // reverse-f3: points of [1, inf)
  std::vector<double> potential;          // ratio: f
  std::optional<std::size_t> family_size;  // additive-potential
};

struct GenSpec {
  GenKind kind = GenKind::ratio;
  std::size_t n = 0;  // 0 = take the size from params
  std::uint64_t seed = 0;
  GenParams params;
};

/// Same spec, same instance, byte for byte. Exact and float instances of one
/// spec share the underlying random draws.
template <class T>
BasicInstance<T> generate(const GenSpec& spec);

/// The raw unit-diagonal positive matrix that the via-closure kind closes.
/// Every cycle product is >= 1.
template <class T>
BasicInstance<T> closure_input(std::size_t n, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Oracles

enum class Verdict { holds, hypothesis_not_met, violated };

std::string_view to_string(Verdict v);

struct OracleResult {
  Verdict verdict = Verdict::hypothesis_not_met;
  std::string detail;
  std::vector<std::size_t> witness;  // indices, meaning depends on the claim
};

const std::vector<std::string>& registered_claims();

/// Re-derives the claim's hypothesis and conclusion on `inst` by direct
/// enumeration. Shares no code with the library modules. Zero-structure
/// claims (p0, t1-Z, Fsp, FZ-alt) are always judged exactly; the rest use the
/// instance's arithmetic, with `tol` for hypotheses and 64 * tol for
/// conclusions on float instances. Throws UsageError for unknown claims and
/// for quartic claims above n = 32.
template <class T>
OracleResult oracle_check(const BasicInstance<T>& inst, std::string_view claim,
                          const Tolerance& tol = {});

inline constexpr std::size_t kOracleQuarticCap = 32;

// ---------------------------------------------------------------------------
// Benchmark

struct KernelTiming {
  double median_s = 0.0;
  double min_s = 0.0;
  double gflops = 0.0;  // 2 n^3 semiring operations / median time
};

struct BenchReport {
  std::size_t n = 0;
  std::size_t reps = 0;
  std::uint64_t seed = 0;
  KernelTiming plain;
  KernelTiming blocked;
  bool identical = false;
};

/// Times plain vs blocked multiplicative closure on closure_input(n, seed).
BenchReport bench_closure(std::size_t n, std::size_t reps, std::uint64_t seed);

}  // namespace sincov
