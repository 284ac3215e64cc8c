#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace momentrange {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class SingularSystem : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class WrongDegree : public Error {
 public:
  using Error::Error;
};

class DegreeTooSmall : public Error {
 public:
  using Error::Error;
};

/// The spline system for a particular t has no unique solution.
class DegenerateT : public Error {
 public:
  using Error::Error;
};

/// Two independent computations that must agree did not. Always a bug.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace momentrange
