#pragma once

#include <stdexcept>
#include <string>

namespace noncontact {

/// Argument outside the mathematical domain of an operation (T <= 0, Z <= 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation hit a pole of a response function.
class SingularityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameter outside the range over which a model is validated.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Approximation requested outside the physical regime it was derived for.
class UnsupportedRegimeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A model violates one of its invariants; the message names the field.
class InvariantError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Integrand returned a non-finite value.
class IntegrandError : public std::runtime_error {
 public:
  IntegrandError(const std::string& what, double omega)
      : std::runtime_error(what), omega_(omega) {}
  double omega() const noexcept { return omega_; }

 private:
  double omega_;
};

/// Malformed parameter file; the message carries file/line/field context.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace noncontact
