#pragma once

// Test-only builders and naive reference checks.

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "sincov/core.hpp"

namespace sincov::test {

template <class T>
BasicInstance<T> mat(const std::vector<std::vector<T>>& rows, Mode mode = Mode::multiplicative) {
  std::vector<T> e;
  for (const auto& r : rows) e.insert(e.end(), r.begin(), r.end());
  return BasicInstance<T>(index_labels(rows.size()), std::move(e), mode);
}

inline Instance dmat(const std::vector<std::vector<double>>& rows,
                     Mode mode = Mode::multiplicative) {
  return mat<double>(rows, mode);
}

/// Entries as "p/q" or decimal strings.
inline ExactInstance qmat(const std::vector<std::vector<std::string>>& rows,
                          Mode mode = Mode::multiplicative) {
  std::vector<std::vector<Rational>> q;
  for (const auto& r : rows) {
    q.emplace_back();
    for (const auto& s : r) q.back().push_back(parse_rational(s));
  }
  return mat<Rational>(q, mode);
}

/// Direct triple enumeration in exact arithmetic; counts failing triples.
inline std::size_t brute_violations(const ExactInstance& m, Law law) {
  const std::size_t n = m.size();
  std::size_t bad = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const Rational &xz = m(x, z), &xy = m(x, y), &yz = m(y, z);
        bool ok = true;
        switch (law) {
          case Law::mult_eq: ok = xz == xy * yz; break;
          case Law::mult_ineq: ok = xz <= xy * yz; break;
          case Law::reverse_ineq: ok = xz >= xy * yz; break;
          case Law::triangle: ok = xz <= xy + yz; break;
        }
        bad += !ok;
      }
  return bad;
}

inline bool bit_equal(const Instance& a, const Instance& b) {
  if (a.labels() != b.labels() || a.mode() != b.mode()) return false;
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    if (std::bit_cast<std::uint64_t>(a.entries()[k]) !=
        std::bit_cast<std::uint64_t>(b.entries()[k])) {
      return false;
    }
  }
  return true;
}

}  // namespace sincov::test
