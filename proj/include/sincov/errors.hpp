#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sincov {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Wrong law for the mode, unknown label, bad option combination.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Malformed or non-finite input data.
class InputError : public Error {
 public:
  using Error::Error;
};

/// The operation's mathematical precondition does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Closure is unbounded below. `cycle` lists vertex indices with the first
/// vertex repeated at the end; `weight` is the exact cycle sum (additive) or
/// product (multiplicative) rendered as text.
class CycleError : public Error {
 public:
  CycleError(const std::string& what, std::vector<std::size_t> cycle,
             std::string weight)
      : Error(what), cycle_(std::move(cycle)), weight_(std::move(weight)) {}

  const std::vector<std::size_t>& cycle() const { return cycle_; }
  const std::string& weight() const { return weight_; }

 private:
  std::vector<std::size_t> cycle_;
  std::string weight_;
};

}  // namespace sincov
