#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lgl {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mismatched modulus or dimension, invalid instance parameters.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class CapacityError : public Error {
 public:
  CapacityError(const std::string& what, std::uint64_t requested)
      : Error(what), requested_(requested) {}
  std::uint64_t requested() const noexcept { return requested_; }

 private:
  std::uint64_t requested_;
};

class NoPreimageError : public Error {
 public:
  using Error::Error;
};

// A factorization that the theory rules out was requested.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// A computed object failed a check that holds in every semigroup of this
// family; indicates a bug rather than bad input.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

class UnsupportedComparison : public Error {
 public:
  using Error::Error;
};

}  // namespace lgl
