#include "vmlab/errors.hpp"

namespace vmlab {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownInstruction: return "UnknownInstruction";
    case ErrorKind::UnknownProcedure: return "UnknownProcedure";
    case ErrorKind::MalformedOperand: return "MalformedOperand";
    case ErrorKind::MissingMain: return "MissingMain";
    case ErrorKind::JumpOutOfRange: return "JumpOutOfRange";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::BadOperandKind: return "BadOperandKind";
    case ErrorKind::AddressOutOfRange: return "AddressOutOfRange";
    case ErrorKind::BadMagic: return "BadMagic";
    case ErrorKind::UnsupportedVersion: return "UnsupportedVersion";
    case ErrorKind::TruncatedRecord: return "TruncatedRecord";
    case ErrorKind::InvalidOpcode: return "InvalidOpcode";
    case ErrorKind::InvalidTag: return "InvalidTag";
    case ErrorKind::TrailingBytes: return "TrailingBytes";
    case ErrorKind::StackUnderflow: return "StackUnderflow";
    case ErrorKind::StackOverflow: return "StackOverflow";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::CallDepthExceeded: return "CallDepthExceeded";
    case ErrorKind::ClockUnavailable: return "ClockUnavailable";
    case ErrorKind::UnknownCase: return "UnknownCase";
    case ErrorKind::CountInstability: return "CountInstability";
    case ErrorKind::IncompleteResults: return "IncompleteResults";
  }
  return "UnknownError";
}

namespace {

std::string tag_message(ErrorKind kind, const std::string& message) {
  return std::string(error_kind_name(kind)) + ": " + message;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(tag_message(kind, message)), kind_(kind) {}

ParseError::ParseError(ErrorKind kind, const std::string& message, std::size_t line)
    : Error(kind, line == 0 ? message : message + " (line " + std::to_string(line) + ")"),
      line_(line) {}

CodecError::CodecError(ErrorKind kind, const std::string& message, std::size_t offset)
    : Error(kind, message + " (offset " + std::to_string(offset) + ")"), offset_(offset) {}

RuntimeError::RuntimeError(ErrorKind kind, const std::string& message) : Error(kind, message) {}

BenchError::BenchError(ErrorKind kind, const std::string& message) : Error(kind, message) {}

}  // namespace vmlab
