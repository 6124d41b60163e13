#ifndef CURV22_ERRORS_HPP
#define CURV22_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace curv22 {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A component array broke A(x,y,z,v) = -A(y,x,z,v) = A(z,v,x,y).
class SymmetryViolation : public Error {
 public:
  using Error::Error;
};

class BianchiViolation : public Error {
 public:
  using Error::Error;
};

class DegeneratePlane : public Error {
 public:
  using Error::Error;
};

class NonUnitVector : public Error {
 public:
  using Error::Error;
};

class NotNull : public Error {
 public:
  using Error::Error;
};

class ZeroVector : public Error {
 public:
  using Error::Error;
};

class NotEinstein : public Error {
 public:
  using Error::Error;
};

class InvalidFrame : public Error {
 public:
  using Error::Error;
};

class DenominatorZero : public Error {
 public:
  using Error::Error;
};

class NotNullOsserman : public Error {
 public:
  using Error::Error;
};

/// Internal consistency check failed; indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace curv22

#endif  // CURV22_ERRORS_HPP
