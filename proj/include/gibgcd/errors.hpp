#pragma once

#include <stdexcept>
#include <string>

namespace gibgcd {

/// Raised when a GCD-producing operation receives the seed pair (0, 0).
class DegenerateSequenceError : public std::invalid_argument {
 public:
  explicit DegenerateSequenceError(const std::string& what)
      : std::invalid_argument(what) {}
};

/// An argument lies outside the documented domain of an operation.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what)
      : std::invalid_argument(what) {}
};

class ModulusError : public std::invalid_argument {
 public:
  explicit ModulusError(const std::string& what)
      : std::invalid_argument(what) {}
};

/// A provably unreachable state was reached.
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

/// A closed form disagreed with the brute-force oracle.
class VerificationError : public std::runtime_error {
 public:
  explicit VerificationError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace gibgcd
