#ifndef NULLCERT_ERROR_HPP
#define NULLCERT_ERROR_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace nullcert {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// An exponent or a total degree left the 32-bit exponent range.
class ExponentOverflow : public Error {
 public:
  ExponentOverflow() : Error("exponent overflow: exponents and total degree must stay below 2^32") {}
};

/// Two operands live in different rings (registry or order differ).
class RingMismatch : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomial : public Error {
 public:
  explicit ZeroPolynomial(const std::string& what) : Error(what + ": polynomial is zero") {}
};

/// A variable name is introduced twice, or collides with a generated name.
class NameClash : public Error {
 public:
  explicit NameClash(const std::string& name) : Error("variable name clash: '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class UnknownVariable : public Error {
 public:
  explicit UnknownVariable(const std::string& name) : Error("unknown variable '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class InvalidOrder : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Diagnostic for malformed system or order text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/// Progress of a Groebner computation at the moment it was abandoned.
struct ComputationStats {
  std::size_t pairs_reduced = 0;
  std::size_t pairs_pending = 0;
  std::size_t basis_size = 0;
  std::uint64_t max_degree_seen = 0;
};

class LimitExceeded : public Error {
 public:
  LimitExceeded(const std::string& which, ComputationStats stats)
      : Error("computation limit exceeded (" + which + ") after " + std::to_string(stats.pairs_reduced) +
              " pair reductions, basis size " + std::to_string(stats.basis_size)),
        stats_(stats) {}
  const ComputationStats& stats() const noexcept { return stats_; }

 private:
  ComputationStats stats_;
};

/// The supplied order does not put the eliminated variables above everything else.
class OrderNotEliminating : public Error {
 public:
  using Error::Error;
};

/// sum(lambda_i * f_i) != 1.
class CertificateInvalid : public Error {
 public:
  using Error::Error;
};

/// A term of a candidate extended final polynomial is neither c*z nor divisible by some y_i.
class DecompositionFailure : public Error {
 public:
  using Error::Error;
};

/// An internal mathematical invariant failed. Always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace nullcert

#endif  // NULLCERT_ERROR_HPP
