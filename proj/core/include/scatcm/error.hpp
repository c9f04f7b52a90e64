#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace scatcm {

// Every failure raised by the library derives from Error so callers can
// catch one type; the subclasses exist for the error paths callers and tests
// need to tell apart.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class UnsupportedRuleSize : public Error {
 public:
  using Error::Error;
};

class InsufficientQuadrature : public Error {
 public:
  using Error::Error;
};

class RuleNotInversionSymmetric : public Error {
 public:
  using Error::Error;
};

class RuleMismatch : public Error {
 public:
  using Error::Error;
};

class NumericalOverflow : public Error {
 public:
  NumericalOverflow(const std::string& what, int degree)
      : Error(what), degree_(degree) {}
  int degree() const noexcept { return degree_; }

 private:
  int degree_;
};

class ZeroContrast : public Error {
 public:
  using Error::Error;
};

class DegenerateExtent : public Error {
 public:
  using Error::Error;
};

class SingularImpedance : public Error {
 public:
  using Error::Error;
};

class BelowSignificanceThreshold : public Error {
 public:
  using Error::Error;
};

class AlreadyWeighted : public Error {
 public:
  using Error::Error;
};

class NotWeighted : public Error {
 public:
  using Error::Error;
};

class EigensolverFailure : public Error {
 public:
  using Error::Error;
};

class BackendError : public Error {
 public:
  BackendError(const std::string& what, std::size_t excitation_index)
      : Error("excitation " + std::to_string(excitation_index) + ": " + what),
        excitation_index_(excitation_index) {}
  std::size_t excitation_index() const noexcept { return excitation_index_; }

 private:
  std::size_t excitation_index_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(const std::string& what, std::size_t expected,
                    std::size_t found)
      : Error(what + ": expected " + std::to_string(expected) + ", found " +
              std::to_string(found)),
        expected_(expected),
        found_(found) {}
  std::size_t expected() const noexcept { return expected_; }
  std::size_t found() const noexcept { return found_; }

 private:
  std::size_t expected_;
  std::size_t found_;
};

class UnknownRule : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace scatcm
