#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jacring {

/// Caller supplied something malformed: bad syntax, wrong ring, bad flag.
/// The CLI maps these to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class RingMismatch : public InputError {
 public:
  RingMismatch() : InputError("operands live in different rings") {}
};

class NotHomogeneous : public InputError {
 public:
  using InputError::InputError;
};

/// The input is well formed but the requested mathematics does not apply
/// (singular hypersurface, non-Artinian quotient, ...). Exit code 1.
class MathRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularInput : public MathRefusal {
 public:
  using MathRefusal::MathRefusal;
};

class NotArtinian : public MathRefusal {
 public:
  using MathRefusal::MathRefusal;
};

class NoStabilization : public MathRefusal {
 public:
  using MathRefusal::MathRefusal;
};

class NonCIShape : public MathRefusal {
 public:
  using MathRefusal::MathRefusal;
};

class DivisionByZero : public MathRefusal {
 public:
  using MathRefusal::MathRefusal;
};

}  // namespace jacring
