#ifndef MODCORE_ERRORS_HPP
#define MODCORE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace modcore {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed polynomial text. Keeps the byte offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Operands live in different rings / ambient modules.
class MismatchError : public Error {
 public:
  using Error::Error;
};

// Violated mathematical precondition (division by zero, bad index, ...).
class MathError : public Error {
 public:
  using Error::Error;
};

// Bad input file or CLI usage.  Exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

// Randomized search gave up (field too small or hypotheses fail).  Exit code 3.
class SamplingError : public Error {
 public:
  using Error::Error;
};

// Two independent constructions of the same object disagree.  Exit code 4.
class CrossCheckError : public Error {
 public:
  using Error::Error;
};

}  // namespace modcore

#endif
