#include "sincov/instance.hpp"

#include <unordered_set>

namespace sincov {

std::string_view to_string(Mode mode) {
  return mode == Mode::multiplicative ? "multiplicative" : "additive";
}

Mode parse_mode(std::string_view text) {
  if (text == "multiplicative" || text == "mult") return Mode::multiplicative;
  if (text == "additive" || text == "add") return Mode::additive;
  throw UsageError("unknown mode '" + std::string(text) + "'");
}

void Tolerance::check() const {
  if (!(rel >= 0.0) || !(zero_tol >= 0.0)) {
    throw UsageError("tolerances must be non-negative");
  }
}

template <class T>
BasicInstance<T>::BasicInstance(std::vector<std::string> labels,
                                std::vector<T> entries, Mode mode)
    : labels_(std::move(labels)), entries_(std::move(entries)), mode_(mode) {
  const std::size_t n = labels_.size();
  if (n == 0) throw InputError("instance must have at least one point");
  if (entries_.size() != n * n) {
    throw InputError("matrix has " + std::to_string(entries_.size()) +
                     " entries, expected " + std::to_string(n * n));
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw InputError("duplicate label '" + l + "'");
  }
  if constexpr (!kIsExact<T>) {
    for (std::size_t k = 0; k < entries_.size(); ++k) {
      if (!is_finite(entries_[k])) {
        throw InputError("non-finite entry at (" + labels_[k / n] + ", " +
                         labels_[k % n] + ")");
      }
    }
  }
}

template <class T>
std::size_t BasicInstance<T>::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  throw UsageError("unknown label '" + std::string(label) + "'");
}

template <class T>
BasicInstance<T> BasicInstance<T>::with_entries(std::vector<T> entries) const {
  return BasicInstance(labels_, std::move(entries), mode_);
}

template <class T>
BasicInstance<T> BasicInstance<T>::with_entries(std::vector<T> entries,
                                                Mode mode) const {
  return BasicInstance(labels_, std::move(entries), mode);
}

template <class T>
BasicInstance<T> BasicInstance<T>::restrict_to(
    std::span<const std::size_t> indices) const {
  std::vector<std::string> labels;
  std::vector<T> entries;
  labels.reserve(indices.size());
  entries.reserve(indices.size() * indices.size());
  for (std::size_t i : indices) {
    labels.push_back(labels_.at(i));
    for (std::size_t j : indices) entries.push_back((*this)(i, j));
  }
  return BasicInstance(std::move(labels), std::move(entries), mode_);
}

template <class T>
bool BasicInstance<T>::operator==(const BasicInstance& other) const {
  return mode_ == other.mode_ && labels_ == other.labels_ &&
         entries_ == other.entries_;
}

ExactInstance to_exact(const Instance& inst) {
  std::vector<Rational> entries;
  entries.reserve(inst.entries().size());
  for (double v : inst.entries()) entries.push_back(to_rational(v));
  return ExactInstance(inst.labels(), std::move(entries), inst.mode());
}

Instance to_float(const ExactInstance& inst) {
  std::vector<double> entries;
  entries.reserve(inst.entries().size());
  for (const auto& v : inst.entries()) entries.push_back(v.get_d());
  return Instance(inst.labels(), std::move(entries), inst.mode());
}

std::vector<std::string> index_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

template class BasicInstance<double>;
template class BasicInstance<Rational>;

}  // namespace sincov
