#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidsym {

/// Input that violates a documented precondition (bad index, wrong rank, ...).
class MalformedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operands of a binary operation live in different ambient objects
/// (free groups of different rank, braid groups on different strand counts,
/// matrices of different size).
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A word grew past the configured length cap while an endomorphism was applied.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotUnimodular : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised by make_automorphism; `generator()` is a 1-based generator index on
/// which one of the two compositions is not the identity.
class NotMutuallyInverse : public std::invalid_argument {
 public:
  NotMutuallyInverse(const std::string& what, int generator)
      : std::invalid_argument(what), generator_(generator) {}

  int generator() const noexcept { return generator_; }

 private:
  int generator_;
};

}  // namespace braidsym
