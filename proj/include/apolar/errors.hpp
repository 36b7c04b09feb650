#ifndef APOLAR_ERRORS_HPP
#define APOLAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace apolar {

/// Base for all library errors. Every error carries a short stable code
/// (used by the CLI and by tests) next to the human-readable message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// Scalars or matrices from different fields were mixed in one operation.
class FieldMismatchError : public Error {
 public:
  explicit FieldMismatchError(const std::string& msg)
      : Error("field-mismatch", msg) {}
};

/// Vector/matrix sizes do not line up.
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& msg)
      : Error("dimension-mismatch", msg) {}
};

/// Form text or form file could not be parsed. Codes: syntax,
/// unknown-variable, malformed-exponent, bad-coefficient, zero-form,
/// bad-header.
class ParseError : public Error {
 public:
  ParseError(std::string code, const std::string& msg)
      : Error(std::move(code), msg) {}
};

/// A parsed form failed normal-form validation, or a precondition on the
/// input form does not hold.
class ValidationError : public Error {
 public:
  ValidationError(std::string code, const std::string& msg)
      : Error(std::move(code), msg) {}
};

/// An internal consistency assertion failed. This is a bug trap, never an
/// input error; the CLI maps it to its own exit code.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& msg) : Error("internal", msg) {}
};

}  // namespace apolar

#endif
