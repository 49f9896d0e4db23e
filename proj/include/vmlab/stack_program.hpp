#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vmlab {

enum class StackOpcode : std::uint8_t {
  Iconst,
  Fconst,
  Cconst,
  Bconst,
  Iadd,
  Imul,
  Idiv,
  Fadd,
  Fmul,
  Fdiv,
  If,
  Ne,
  And,
  Or,
  Xor,
  Dup,
  Swap,
  Inc,
  Dec,
  Pop,
  Gload,
  Gstore,
  Call,
  Ret,
  Ter,
  Goto,
  IfIcmple,
  Ilt,
  Igt,
  Ieq,
  Print,
};

inline constexpr std::size_t kStackOpcodeCount = 31;

/// What an opcode's single operand slot holds in source text, if anything.
/// Every opcode has a fixed arity of 0 or 1.
enum class StackOperandClass : std::uint8_t {
  None,
  IntLit,
  FloatLit,
  CharLit,
  BoolLit,
  LineIndex,
  ProcedureName,
};

StackOperandClass stack_operand_class(StackOpcode op);
const char* stack_opcode_name(StackOpcode op);
std::optional<StackOpcode> stack_opcode_from_name(std::string_view name);

/// Assembled operand payload. ProcedureName operands become Proc indices and
/// jump targets become 0-based Line indices during assembly.
enum class StackOperandKind : std::uint8_t { None, Int, Float, Char, Bool, Line, Proc };

struct StackInstr {
  StackOpcode op = StackOpcode::Ret;
  StackOperandKind operand_kind = StackOperandKind::None;
  union {
    std::int32_t int_value;
    double float_value;
    char char_value;
    bool bool_value;
    std::uint32_t index;  // line index or procedure index
  };

  StackInstr() : index(0) {}

  bool has_operand() const noexcept { return operand_kind != StackOperandKind::None; }

  static StackInstr plain(StackOpcode op);
  static StackInstr with_int(StackOpcode op, std::int32_t v);
  static StackInstr with_float(StackOpcode op, double v);
  static StackInstr with_char(StackOpcode op, char v);
  static StackInstr with_bool(StackOpcode op, bool v);
  static StackInstr with_line(StackOpcode op, std::uint32_t line);
  static StackInstr with_proc(StackOpcode op, std::uint32_t proc);
};

bool operator==(const StackInstr& a, const StackInstr& b);
inline bool operator!=(const StackInstr& a, const StackInstr& b) { return !(a == b); }

struct ProcedureDef {
  std::string name;
  std::vector<StackInstr> instrs;
};

/// An assembled program: ordered procedures, index 0 is `main`, every call
/// operand is a valid procedure index and every jump target is in range.
struct StackProgram {
  std::vector<ProcedureDef> procedures;
};

}  // namespace vmlab
