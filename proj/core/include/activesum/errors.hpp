#ifndef ACTIVESUM_ERRORS_HPP
#define ACTIVESUM_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace activesum {

// Error taxonomy. The `kind` drives CLI exit codes: validation failures
// exit 1, budget/cutoff failures exit 2, parse failures exit 3.
enum class ErrorKind {
  Validation,
  Budget,
  Parse,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

class MembershipError : public Error {
public:
  explicit MembershipError(const std::string &what)
      : Error(ErrorKind::Validation, "membership: " + what) {}
};

class CutoffExceeded : public Error {
public:
  explicit CutoffExceeded(const std::string &what)
      : Error(ErrorKind::Budget, "cutoff exceeded: " + what) {}
};

// Statistics of an abandoned coset enumeration travel with the exception;
// the table itself is discarded.
struct EnumerationStats {
  std::uint64_t cosets_final = 0;
  std::uint64_t cosets_peak = 0;
  std::uint64_t coincidences = 0;
  std::uint64_t definitions = 0;
};

class BudgetExceeded : public Error {
public:
  BudgetExceeded(const std::string &what, EnumerationStats stats)
      : Error(ErrorKind::Budget, "budget exceeded: " + what), stats_(stats) {}

  const EnumerationStats &stats() const { return stats_; }

private:
  EnumerationStats stats_;
};

class FamilyTooLarge : public Error {
public:
  explicit FamilyTooLarge(const std::string &what)
      : Error(ErrorKind::Budget, "family too large: " + what) {}
};

class EncodingError : public Error {
public:
  explicit EncodingError(const std::string &what)
      : Error(ErrorKind::Validation, "encoding: " + what) {}
};

class HypothesisViolation : public Error {
public:
  HypothesisViolation(const std::string &hypothesis, const std::string &witness)
      : Error(ErrorKind::Validation,
              "hypothesis violated: " + hypothesis + " (witness: " + witness + ")"),
        hypothesis_(hypothesis), witness_(witness) {}

  const std::string &hypothesis() const { return hypothesis_; }
  const std::string &witness() const { return witness_; }

private:
  std::string hypothesis_;
  std::string witness_;
};

class MissingSchurData : public Error {
public:
  explicit MissingSchurData(const std::string &what)
      : Error(ErrorKind::Validation, "missing Schur data: " + what) {}
};

class DivisibilityError : public Error {
public:
  explicit DivisibilityError(const std::string &what)
      : Error(ErrorKind::Validation, "divisibility: " + what) {}
};

class UnsupportedParameters : public Error {
public:
  explicit UnsupportedParameters(const std::string &what)
      : Error(ErrorKind::Validation, "unsupported parameters: " + what) {}
};

class ParseError : public Error {
public:
  ParseError(const std::string &what, std::size_t line)
      : Error(ErrorKind::Parse,
              "parse error at line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

} // namespace activesum

#endif
