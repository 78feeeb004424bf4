#pragma once

#include <stdexcept>
#include <string>

namespace grpolab {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Caller passed arguments violating a documented precondition.
struct InvalidArgument : Error {
  using Error::Error;
};

/// Configuration file / TrainConfig validation failure. Maps to exit code 1.
struct ConfigError : Error {
  using Error::Error;
};

/// Filesystem or stream failure. Maps to exit code 2.
struct IoError : Error {
  using Error::Error;
};

/// NaN/Inf detected where finite values are required. Maps to exit code 2.
struct NumericError : Error {
  using Error::Error;
};

/// Malformed hint document. `kind()` names which grammar rule failed.
class HintDocumentError : public Error {
 public:
  enum class Kind { missing_section, too_few_items, malformed_numbering };

  HintDocumentError(Kind kind, std::string section, const std::string& message)
      : Error(message), kind_(kind), section_(std::move(section)) {}

  Kind kind() const { return kind_; }
  const std::string& section() const { return section_; }

 private:
  Kind kind_;
  std::string section_;
};

/// Problem-bank file violation; `line()` is 1-based, 0 when not line-specific.
class BankFormatError : public Error {
 public:
  enum class Kind { io, parse, schema_version, validation };

  BankFormatError(Kind kind, int line, const std::string& message)
      : Error(message), kind_(kind), line_(line) {}

  Kind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  Kind kind_;
  int line_;
};

}  // namespace grpolab
