#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace zdg {

/// Base class of every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The table is not square, has an out-of-range entry, or bad labels.
class MalformedTable : public Error {
 public:
  using Error::Error;
};

/// One violated semigroup law found by validation.
struct Violation {
  enum class Kind { kZeroNotAbsorbing, kNotCommutative, kNotAssociative };
  Kind kind;
  std::uint32_t x = 0;
  std::uint32_t y = 0;
  std::uint32_t z = 0;

  std::string describe() const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

/// A well-formed table that breaks one or more semigroup laws.
class InvalidTable : public Error {
 public:
  explicit InvalidTable(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

class OrderTooLarge : public Error {
 public:
  using Error::Error;
};

class EmptySet : public Error {
 public:
  EmptySet() : Error("element set is empty") {}
};

class EmptyPartList : public Error {
 public:
  EmptyPartList() : Error("orthogonal union needs at least two parts") {}
};

class Disconnected : public Error {
 public:
  Disconnected() : Error("graph is not connected") {}
};

class TooFewVertices : public Error {
 public:
  using Error::Error;
};

class UnknownVertex : public Error {
 public:
  using Error::Error;
};

class UnknownPredicate : public Error {
 public:
  using Error::Error;
};

class UnknownExample : public Error {
 public:
  using Error::Error;
};

class UnknownTheorem : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace zdg
