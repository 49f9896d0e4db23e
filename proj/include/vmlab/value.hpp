#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vmlab/errors.hpp"

namespace vmlab {

enum class ValueTag : std::uint8_t { Int, Float, Char, Bool };

const char* value_tag_name(ValueTag tag);

/// Runtime datum of the stack VM. The tag is fixed at construction; integer
/// arithmetic wraps modulo 2^32 and never promotes.
class Value {
 public:
  static Value of_int(std::int32_t v) {
    Value out(ValueTag::Int);
    out.i_ = v;
    return out;
  }
  static Value of_float(double v) {
    Value out(ValueTag::Float);
    out.f_ = v;
    return out;
  }
  static Value of_char(char v) {
    Value out(ValueTag::Char);
    out.c_ = v;
    return out;
  }
  static Value of_bool(bool v) {
    Value out(ValueTag::Bool);
    out.b_ = v;
    return out;
  }

  ValueTag tag() const noexcept { return tag_; }

  // Accessors raise TypeMismatch when the tag does not match; the interpreter
  // relies on this for its per-operation tag checks.
  std::int32_t as_int() const;
  double as_float() const;
  char as_char() const;
  bool as_bool() const;

  /// Falsy means Bool false or Int 0; every other value is truthy.
  bool is_falsy() const noexcept {
    if (tag_ == ValueTag::Bool) return !b_;
    if (tag_ == ValueTag::Int) return i_ == 0;
    return false;
  }

  /// Rendering used by `print` (no trailing newline).
  std::string to_string() const;

  friend bool operator==(const Value& a, const Value& b);

 private:
  explicit Value(ValueTag tag) : tag_(tag) { i_ = 0; }

  ValueTag tag_;
  union {
    std::int32_t i_;
    double f_;
    char c_;
    bool b_;
  };
};

inline bool operator!=(const Value& a, const Value& b) { return !(a == b); }

/// LIFO of tagged values with a fixed capacity. Push beyond capacity raises
/// StackOverflow instead of growing; pop on empty raises StackUnderflow.
class OperandStack {
 public:
  explicit OperandStack(std::size_t capacity) : capacity_(capacity) {}

  void push(Value v) {
    if (items_.size() >= capacity_) {
      throw RuntimeError(ErrorKind::StackOverflow,
                         "push beyond capacity " + std::to_string(capacity_));
    }
    items_.push_back(v);
  }

  Value pop() {
    if (items_.empty()) {
      throw RuntimeError(ErrorKind::StackUnderflow, "pop on empty stack");
    }
    Value v = items_.back();
    items_.pop_back();
    return v;
  }

  const Value& top() const {
    if (items_.empty()) {
      throw RuntimeError(ErrorKind::StackUnderflow, "top of empty stack");
    }
    return items_.back();
  }

  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  std::size_t capacity() const noexcept { return capacity_; }

  /// Items bottom first; the bottom element of main's stack is the program
  /// result.
  const std::vector<Value>& items() const noexcept { return items_; }

 private:
  std::size_t capacity_;
  std::vector<Value> items_;
};

}  // namespace vmlab
