#pragma once

#include <stdexcept>
#include <string>

namespace delta {

enum class ErrorKind {
  DimMismatch,
  NotNumerical,
  NotSigmaShaped,
  SizeLimit,
  InvalidSet,
  ConstantPolynomial,
  NotQuasiLinear,
  NotAutoreduced,
  NotTriangular,
  Unstable,
  StepCapExceeded,
  MissingRule,
  UnknownEntry,
  SyntaxError,
  UndeclaredSymbol,
  ArityError,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it to an exit code without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse errors additionally carry a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, const std::string& what, int line, int column)
      : Error(kind, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::NotNumerical: return "NotNumerical";
    case ErrorKind::NotSigmaShaped: return "NotSigmaShaped";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::InvalidSet: return "InvalidSet";
    case ErrorKind::ConstantPolynomial: return "ConstantPolynomial";
    case ErrorKind::NotQuasiLinear: return "NotQuasiLinear";
    case ErrorKind::NotAutoreduced: return "NotAutoreduced";
    case ErrorKind::NotTriangular: return "NotTriangular";
    case ErrorKind::Unstable: return "Unstable";
    case ErrorKind::StepCapExceeded: return "StepCapExceeded";
    case ErrorKind::MissingRule: return "MissingRule";
    case ErrorKind::UnknownEntry: return "UnknownEntry";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UndeclaredSymbol: return "UndeclaredSymbol";
    case ErrorKind::ArityError: return "ArityError";
  }
  return "Error";
}

}  // namespace delta
