#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sincov/errors.hpp"
#include "sincov/scalar.hpp"

namespace sincov {

enum class Mode { multiplicative, additive };

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);

/// Comparison policy. In exact mode `rel` and `zero_tol` are ignored and all
/// comparisons are strict.
struct Tolerance {
  double rel = 1e-9;
  double zero_tol = 1e-12;
  bool exact = false;

  /// Throws UsageError on negative fields.
  void check() const;
};

/// A finite ground set with labels and a square matrix over it.
///
/// Entries are stored row-major. Labels are pairwise distinct and index rows
/// and columns identically. Every entry is finite.
template <class T>
class BasicInstance {
 public:
  using value_type = T;

  BasicInstance(std::vector<std::string> labels, std::vector<T> entries,
                Mode mode);

  std::size_t size() const { return labels_.size(); }
  Mode mode() const { return mode_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }

  /// Throws UsageError for unknown labels.
  std::size_t index_of(std::string_view label) const;

  const T& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * labels_.size() + col];
  }
  std::span<const T> row(std::size_t r) const {
    return {entries_.data() + r * size(), size()};
  }
  const std::vector<T>& entries() const { return entries_; }

  /// Same labels, new entries and (optionally) a new mode.
  BasicInstance with_entries(std::vector<T> entries) const;
  BasicInstance with_entries(std::vector<T> entries, Mode mode) const;

  /// Principal submatrix on the given indices, in the given order.
  BasicInstance restrict_to(std::span<const std::size_t> indices) const;

  bool operator==(const BasicInstance& other) const;

 private:
  std::vector<std::string> labels_;
  std::vector<T> entries_;
  Mode mode_;
};

using Instance = BasicInstance<double>;
using ExactInstance = BasicInstance<Rational>;

ExactInstance to_exact(const Instance& inst);
Instance to_float(const ExactInstance& inst);

/// Default labels "0", "1", ... used by generators.
std::vector<std::string> index_labels(std::size_t n);

extern template class BasicInstance<double>;
extern template class BasicInstance<Rational>;

}  // namespace sincov
