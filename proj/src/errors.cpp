#include "entplan/errors.hpp"

namespace entplan {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::UniverseMismatch: return "UniverseMismatch";
    case ErrorKind::ZeroTotalWeight: return "ZeroTotalWeight";
    case ErrorKind::EmptyPart: return "EmptyPart";
    case ErrorKind::DegenerateMarginal: return "DegenerateMarginal";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DuplicateUnit: return "DuplicateUnit";
    case ErrorKind::UnknownUnit: return "UnknownUnit";
    case ErrorKind::MissingLabel: return "MissingLabel";
    case ErrorKind::MalformedRow: return "MalformedRow";
    case ErrorKind::NegativeWeight: return "NegativeWeight";
    case ErrorKind::MissingColumn: return "MissingColumn";
    case ErrorKind::CategoryExceedsTotal: return "CategoryExceedsTotal";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::UnknownFixtureName: return "UnknownFixtureName";
    case ErrorKind::IoError: return "IoError";
  }
  return "UnknownError";
}

int error_exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return 2;
    case ErrorKind::UniverseMismatch: return 10;
    case ErrorKind::ZeroTotalWeight: return 11;
    case ErrorKind::EmptyPart: return 12;
    case ErrorKind::DegenerateMarginal: return 13;
    case ErrorKind::IndexOutOfRange: return 14;
    case ErrorKind::DuplicateUnit: return 15;
    case ErrorKind::UnknownUnit: return 16;
    case ErrorKind::MissingLabel: return 17;
    case ErrorKind::MalformedRow: return 18;
    case ErrorKind::NegativeWeight: return 19;
    case ErrorKind::MissingColumn: return 20;
    case ErrorKind::CategoryExceedsTotal: return 21;
    case ErrorKind::SelfLoop: return 22;
    case ErrorKind::UnknownFixtureName: return 23;
    case ErrorKind::IoError: return 24;
  }
  return 1;
}

}  // namespace entplan
