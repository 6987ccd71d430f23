#pragma once

#include <stdexcept>
#include <string>

namespace toricgraph {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad input: malformed graph, unknown family parameter, ill-formed order, ...
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// Objects from different polynomial contexts were mixed.
class ContextMismatchError : public Error {
 public:
  explicit ContextMismatchError(const std::string& msg) : Error(msg) {}
};

// A configured cap (pair queue, walk count, cell budget, ...) was exceeded.
// The message names the cap and the size that tripped it.
class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& msg) : Error(msg) {}
};

// An internal cross-check failed; indicates a bug, never bad user input.
class IntegrityError : public Error {
 public:
  explicit IntegrityError(const std::string& msg) : Error(msg) {}
};

}  // namespace toricgraph
