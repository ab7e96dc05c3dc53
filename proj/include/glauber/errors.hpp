#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace glauber {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  enum class Reason { Malformed, SelfLoop, DuplicateEdge, IndexOutOfRange };

  ParseError(Reason reason, std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), reason_(reason), line_(line) {}

  Reason reason() const noexcept { return reason_; }
  std::size_t line() const noexcept { return line_; }

 private:
  Reason reason_;
  std::size_t line_;
};

/// Invalid weight-model parameters, or a model that does not fit the graph it is applied to.
class ModelError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive computation was asked to enumerate more states than its cap allows.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace glauber
