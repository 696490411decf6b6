#ifndef GRASSGB_ERRORS_HPP
#define GRASSGB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grassgb {

// Base of every exception the library throws. The C API maps each subclass
// onto one ggb_status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid arguments: bad tower parameter, index out of range, empty input.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Values from different rings were combined (extended monomials with different t).
class DomainMismatchError : public Error {
 public:
  using Error::Error;
};

// An exponent or degree left the representable range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomialError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// The reduction-step or enumeration budget was exhausted.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// A precondition on the mathematical content of an argument does not hold,
// e.g. reduce_gb() called on a set that is not a Groebner basis.
class ContractError : public Error {
 public:
  using Error::Error;
};

// A Steenrod square of a class could not be determined because the unknown
// squares of the exterior generator do not provably vanish.
class IndeterminateResult : public Error {
 public:
  using Error::Error;
};

class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace grassgb

#endif  // GRASSGB_ERRORS_HPP
