#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vmlab {

enum class ErrorKind {
  // assembler (text -> program)
  UnknownInstruction,
  UnknownProcedure,
  MalformedOperand,
  MissingMain,
  JumpOutOfRange,
  UnknownLabel,
  DuplicateLabel,
  ArityMismatch,
  BadOperandKind,
  AddressOutOfRange,
  // binary codec
  BadMagic,
  UnsupportedVersion,
  TruncatedRecord,
  InvalidOpcode,
  InvalidTag,
  TrailingBytes,
  // execution
  StackUnderflow,
  StackOverflow,
  TypeMismatch,
  DivisionByZero,
  CallDepthExceeded,
  ClockUnavailable,
  // harness
  UnknownCase,
  CountInstability,
  IncompleteResults,
};

const char* error_kind_name(ErrorKind kind);

/// Base for every structured error the library raises.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised while assembling `.fng` / `.gnf` text. `line` is the 1-based
/// source line the error was detected on (0 when not line-specific).
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, const std::string& message, std::size_t line = 0);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Raised while decoding `.gnfb` binary. `offset` is the byte offset of the
/// offending datum.
class CodecError : public Error {
 public:
  CodecError(ErrorKind kind, const std::string& message, std::size_t offset = 0);
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Raised by a running machine. Execution halts; the error is annotated with
/// the failing location (procedure/line for the stack VM, pc for the register
/// VM) by the interpreter before it propagates.
class RuntimeError : public Error {
 public:
  RuntimeError(ErrorKind kind, const std::string& message);
};

class BenchError : public Error {
 public:
  BenchError(ErrorKind kind, const std::string& message);
};

}  // namespace vmlab
