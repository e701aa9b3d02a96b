#include <algorithm>
#include <bit>
#include <chrono>

#include "sincov/genbench.hpp"
#include "sincov/metric.hpp"

namespace sincov {

namespace {

bool bit_identical(const Instance& a, const Instance& b) {
  const auto& x = a.entries();
  const auto& y = b.entries();
  if (x.size() != y.size()) return false;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (std::bit_cast<std::uint64_t>(x[k]) != std::bit_cast<std::uint64_t>(y[k])) return false;
  }
  return true;
}

KernelTiming summarize(std::vector<double> seconds, std::size_t n) {
  std::sort(seconds.begin(), seconds.end());
  KernelTiming t;
  const std::size_t m = seconds.size();
  t.median_s = m % 2 ? seconds[m / 2] : 0.5 * (seconds[m / 2 - 1] + seconds[m / 2]);
  t.min_s = seconds.front();
  const double ops = 2.0 * static_cast<double>(n) * static_cast<double>(n) * static_cast<double>(n);
  t.gflops = t.median_s > 0 ? ops / t.median_s * 1e-9 : 0.0;
  return t;
}

}  // namespace

BenchReport bench_closure(std::size_t n, std::size_t reps, std::uint64_t seed) {
  if (n < 2) throw UsageError("bench: n must be at least 2");
  if (reps < 1) throw UsageError("bench: reps must be at least 1");
  const Instance input = closure_input<double>(n, seed);
  std::vector<double> plain_s, blocked_s;
  BenchReport r{n, reps, seed, {}, {}, true};
  using clock = std::chrono::steady_clock;
  for (std::size_t i = 0; i < reps; ++i) {
    auto t0 = clock::now();
    Instance p = closure(input, ClosureKernel::plain);
    auto t1 = clock::now();
    Instance b = closure(input, ClosureKernel::blocked);
    auto t2 = clock::now();
    plain_s.push_back(std::chrono::duration<double>(t1 - t0).count());
    blocked_s.push_back(std::chrono::duration<double>(t2 - t1).count());
    r.identical = r.identical && bit_identical(p, b);
  }
  r.plain = summarize(std::move(plain_s), n);
  r.blocked = summarize(std::move(blocked_s), n);
  return r;
}

}  // namespace sincov
