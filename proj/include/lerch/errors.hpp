#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace lerch {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The call itself is malformed (bad order, wrong path for the arguments, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure did not reach its tolerance. Carries the best value found.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, std::complex<long double> best)
      : Error(what), best_(best) {}

  std::complex<long double> best() const noexcept { return best_; }

 private:
  std::complex<long double> best_;
};

/// A series stopped at its order cap before meeting the stop rule.
class TruncationError : public AccuracyError {
 public:
  using AccuracyError::AccuracyError;
};

/// The reference value is too small for a relative error to mean anything.
class DegenerateReferenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace lerch
