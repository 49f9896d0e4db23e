#include "vmlab/value.hpp"

#include <charconv>

namespace vmlab {

const char* value_tag_name(ValueTag tag) {
  switch (tag) {
    case ValueTag::Int: return "int";
    case ValueTag::Float: return "float";
    case ValueTag::Char: return "char";
    case ValueTag::Bool: return "bool";
  }
  return "?";
}

namespace {

[[noreturn]] void tag_error(ValueTag want, ValueTag got) {
  throw RuntimeError(ErrorKind::TypeMismatch, std::string("expected ") + value_tag_name(want) +
                                                  ", got " + value_tag_name(got));
}

}  // namespace

std::int32_t Value::as_int() const {
  if (tag_ != ValueTag::Int) tag_error(ValueTag::Int, tag_);
  return i_;
}

double Value::as_float() const {
  if (tag_ != ValueTag::Float) tag_error(ValueTag::Float, tag_);
  return f_;
}

char Value::as_char() const {
  if (tag_ != ValueTag::Char) tag_error(ValueTag::Char, tag_);
  return c_;
}

bool Value::as_bool() const {
  if (tag_ != ValueTag::Bool) tag_error(ValueTag::Bool, tag_);
  return b_;
}

std::string Value::to_string() const {
  switch (tag_) {
    case ValueTag::Int:
      return std::to_string(i_);
    case ValueTag::Float: {
      char buf[64];
      auto [end, ec] = std::to_chars(buf, buf + sizeof buf, f_);
      (void)ec;
      return std::string(buf, end);
    }
    case ValueTag::Char:
      return std::string(1, c_);
    case ValueTag::Bool:
      return b_ ? "true" : "false";
  }
  return {};
}

bool operator==(const Value& a, const Value& b) {
  if (a.tag_ != b.tag_) return false;
  switch (a.tag_) {
    case ValueTag::Int: return a.i_ == b.i_;
    case ValueTag::Float: return a.f_ == b.f_;
    case ValueTag::Char: return a.c_ == b.c_;
    case ValueTag::Bool: return a.b_ == b.b_;
  }
  return false;
}

}  // namespace vmlab
