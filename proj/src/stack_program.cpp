#include "vmlab/stack_program.hpp"

#include <array>

namespace vmlab {

namespace {

struct OpcodeInfo {
  const char* name;
  StackOpcode op;
  StackOperandClass operand;
};

constexpr std::array<OpcodeInfo, kStackOpcodeCount> kOpcodeTable{{
    {"iconst", StackOpcode::Iconst, StackOperandClass::IntLit},
    {"fconst", StackOpcode::Fconst, StackOperandClass::FloatLit},
    {"cconst", StackOpcode::Cconst, StackOperandClass::CharLit},
    {"bconst", StackOpcode::Bconst, StackOperandClass::BoolLit},
    {"iadd", StackOpcode::Iadd, StackOperandClass::None},
    {"imul", StackOpcode::Imul, StackOperandClass::None},
    {"idiv", StackOpcode::Idiv, StackOperandClass::None},
    {"fadd", StackOpcode::Fadd, StackOperandClass::None},
    {"fmul", StackOpcode::Fmul, StackOperandClass::None},
    {"fdiv", StackOpcode::Fdiv, StackOperandClass::None},
    {"if", StackOpcode::If, StackOperandClass::None},
    {"ne", StackOpcode::Ne, StackOperandClass::None},
    {"and", StackOpcode::And, StackOperandClass::None},
    {"or", StackOpcode::Or, StackOperandClass::None},
    {"xor", StackOpcode::Xor, StackOperandClass::None},
    {"dup", StackOpcode::Dup, StackOperandClass::None},
    {"swap", StackOpcode::Swap, StackOperandClass::None},
    {"inc", StackOpcode::Inc, StackOperandClass::None},
    {"dec", StackOpcode::Dec, StackOperandClass::None},
    {"pop", StackOpcode::Pop, StackOperandClass::None},
    {"gload", StackOpcode::Gload, StackOperandClass::None},
    {"gstore", StackOpcode::Gstore, StackOperandClass::None},
    {"call", StackOpcode::Call, StackOperandClass::ProcedureName},
    {"ret", StackOpcode::Ret, StackOperandClass::None},
    {"ter", StackOpcode::Ter, StackOperandClass::None},
    {"goto", StackOpcode::Goto, StackOperandClass::LineIndex},
    {"if_icmple", StackOpcode::IfIcmple, StackOperandClass::LineIndex},
    {"ilt", StackOpcode::Ilt, StackOperandClass::None},
    {"igt", StackOpcode::Igt, StackOperandClass::None},
    {"ieq", StackOpcode::Ieq, StackOperandClass::None},
    {"print", StackOpcode::Print, StackOperandClass::None},
}};

}  // namespace

StackOperandClass stack_operand_class(StackOpcode op) {
  for (const auto& info : kOpcodeTable) {
    if (info.op == op) return info.operand;
  }
  return StackOperandClass::None;
}

const char* stack_opcode_name(StackOpcode op) {
  for (const auto& info : kOpcodeTable) {
    if (info.op == op) return info.name;
  }
  return "?";
}

std::optional<StackOpcode> stack_opcode_from_name(std::string_view name) {
  for (const auto& info : kOpcodeTable) {
    if (name == info.name) return info.op;
  }
  return std::nullopt;
}

StackInstr StackInstr::plain(StackOpcode op) {
  StackInstr in;
  in.op = op;
  in.operand_kind = StackOperandKind::None;
  return in;
}

StackInstr StackInstr::with_int(StackOpcode op, std::int32_t v) {
  StackInstr in;
  in.op = op;
  in.operand_kind = StackOperandKind::Int;
  in.int_value = v;
  return in;
}

StackInstr StackInstr::with_float(StackOpcode op, double v) {
  StackInstr in;
  in.op = op;
  in.operand_kind = StackOperandKind::Float;
  in.float_value = v;
  return in;
}

StackInstr StackInstr::with_char(StackOpcode op, char v) {
  StackInstr in;
  in.op = op;
  in.operand_kind = StackOperandKind::Char;
  in.char_value = v;
  return in;
}

StackInstr StackInstr::with_bool(StackOpcode op, bool v) {
  StackInstr in;
  in.op = op;
  in.operand_kind = StackOperandKind::Bool;
  in.bool_value = v;
  return in;
}

StackInstr StackInstr::with_line(StackOpcode op, std::uint32_t line) {
  StackInstr in;
  in.op = op;
  in.operand_kind = StackOperandKind::Line;
  in.index = line;
  return in;
}

StackInstr StackInstr::with_proc(StackOpcode op, std::uint32_t proc) {
  StackInstr in;
  in.op = op;
  in.operand_kind = StackOperandKind::Proc;
  in.index = proc;
  return in;
}

bool operator==(const StackInstr& a, const StackInstr& b) {
  if (a.op != b.op || a.operand_kind != b.operand_kind) return false;
  switch (a.operand_kind) {
    case StackOperandKind::None: return true;
    case StackOperandKind::Int: return a.int_value == b.int_value;
    case StackOperandKind::Float: return a.float_value == b.float_value;
    case StackOperandKind::Char: return a.char_value == b.char_value;
    case StackOperandKind::Bool: return a.bool_value == b.bool_value;
    case StackOperandKind::Line:
    case StackOperandKind::Proc: return a.index == b.index;
  }
  return false;
}

}  // namespace vmlab
