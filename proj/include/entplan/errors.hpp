#pragma once

#include <stdexcept>
#include <string>

namespace entplan {

// Every failure mode the library reports. Each kind maps to a stable
// nonzero process exit code (see Error::exit_code) so scripts can
// distinguish error classes without parsing messages.
enum class ErrorKind {
  InvalidArgument,
  UniverseMismatch,
  ZeroTotalWeight,
  EmptyPart,
  DegenerateMarginal,
  IndexOutOfRange,
  DuplicateUnit,
  UnknownUnit,
  MissingLabel,
  MalformedRow,
  NegativeWeight,
  MissingColumn,
  CategoryExceedsTotal,
  SelfLoop,
  UnknownFixtureName,
  IoError,
};

const char* error_kind_name(ErrorKind kind);
int error_exit_code(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }
  const char* kind_name() const { return error_kind_name(kind_); }
  int exit_code() const { return error_exit_code(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace entplan
