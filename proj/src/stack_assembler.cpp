#include "vmlab/stack_assembler.hpp"

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "vmlab/errors.hpp"

namespace vmlab {

namespace {

// One source line, stripped of comments, split on whitespace.
struct SourceLine {
  std::size_t number = 0;  // 1-based
  std::vector<std::string_view> tokens;
};

std::vector<SourceLine> tokenize(std::string_view text) {
  std::vector<SourceLine> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                           : eol - pos);
    ++line_no;
    if (std::size_t semi = line.find(';'); semi != std::string_view::npos) {
      line = line.substr(0, semi);
    }
    SourceLine out;
    out.number = line_no;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
      if (i > start) out.tokens.push_back(line.substr(start, i - start));
    }
    if (!out.tokens.empty()) lines.push_back(std::move(out));
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return lines;
}

bool parse_int32(std::string_view tok, std::int32_t& out) {
  std::int64_t wide = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), wide);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) return false;
  if (wide < INT32_MIN || wide > INT32_MAX) return false;
  out = static_cast<std::int32_t>(wide);
  return true;
}

bool parse_uint32(std::string_view tok, std::uint32_t& out) {
  std::uint64_t wide = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), wide);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) return false;
  if (wide > UINT32_MAX) return false;
  out = static_cast<std::uint32_t>(wide);
  return true;
}

bool parse_char_literal(std::string_view tok, char& out) {
  if (tok.size() == 1) {
    out = tok[0];
    return true;
  }
  // quoted form: 'x' or an escape like '\n'
  if (tok.size() >= 3 && tok.front() == '\'' && tok.back() == '\'') {
    std::string_view body = tok.substr(1, tok.size() - 2);
    if (body.size() == 1) {
      out = body[0];
      return true;
    }
    if (body.size() == 2 && body[0] == '\\') {
      switch (body[1]) {
        case 'n': out = '\n'; return true;
        case 't': out = '\t'; return true;
        case '0': out = '\0'; return true;
        case '\\': out = '\\'; return true;
        case '\'': out = '\''; return true;
        default: return false;
      }
    }
  }
  return false;
}

struct PendingJump {
  std::size_t proc;
  std::size_t instr;
  std::uint32_t target;
  std::size_t source_line;
};

}  // namespace

StackProgram parse_stack_source(std::string_view text) {
  const std::vector<SourceLine> lines = tokenize(text);

  // Phase 1: procedure name table, in declaration order.
  std::vector<std::string> names;
  for (const auto& line : lines) {
    if (line.tokens[0] == "procedure") {
      if (line.tokens.size() != 2) {
        throw ParseError(ErrorKind::MalformedOperand, "procedure header takes exactly one name",
                         line.number);
      }
      names.emplace_back(line.tokens[1]);
    }
  }
  if (names.empty()) {
    throw ParseError(ErrorKind::MissingMain, "no procedure declared; first must be main");
  }
  if (names.front() != "main") {
    throw ParseError(ErrorKind::MissingMain, "first procedure is '" + names.front() +
                                                 "', expected 'main'");
  }

  auto find_procedure = [&names](std::string_view name) -> std::int64_t {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == name) return static_cast<std::int64_t>(i);  // first match wins
    }
    return -1;
  };

  // Phase 2: parse instructions, resolving call targets immediately and jump
  // targets once the enclosing procedure's length is known.
  StackProgram program;
  std::vector<PendingJump> jumps;
  bool in_procedure = false;

  for (const auto& line : lines) {
    const std::string_view head = line.tokens[0];
    if (head == "procedure") {
      program.procedures.push_back(ProcedureDef{std::string(line.tokens[1]), {}});
      in_procedure = true;
      continue;
    }
    if (!in_procedure) {
      throw ParseError(ErrorKind::MissingMain,
                       "instruction before the first procedure header", line.number);
    }

    const auto opcode = stack_opcode_from_name(head);
    if (!opcode) {
      throw ParseError(ErrorKind::UnknownInstruction, "'" + std::string(head) + "'", line.number);
    }

    const StackOperandClass cls = stack_operand_class(*opcode);
    const std::size_t want_operands = cls == StackOperandClass::None ? 0 : 1;
    if (line.tokens.size() - 1 != want_operands) {
      throw ParseError(ErrorKind::MalformedOperand,
                       "'" + std::string(head) + "' takes " + std::to_string(want_operands) +
                           " operand(s), got " + std::to_string(line.tokens.size() - 1),
                       line.number);
    }

    ProcedureDef& proc = program.procedures.back();
    StackInstr instr;
    switch (cls) {
      case StackOperandClass::None:
        instr = StackInstr::plain(*opcode);
        break;
      case StackOperandClass::IntLit: {
        std::int32_t v;
        if (!parse_int32(line.tokens[1], v)) {
          throw ParseError(ErrorKind::MalformedOperand,
                           "expected 32-bit integer, got '" + std::string(line.tokens[1]) + "'",
                           line.number);
        }
        instr = StackInstr::with_int(*opcode, v);
        break;
      }
      case StackOperandClass::FloatLit: {
        std::string tok(line.tokens[1]);
        char* end = nullptr;
        double v = std::strtod(tok.c_str(), &end);
        if (end != tok.c_str() + tok.size() || tok.empty()) {
          throw ParseError(ErrorKind::MalformedOperand,
                           "expected float literal, got '" + tok + "'", line.number);
        }
        instr = StackInstr::with_float(*opcode, v);
        break;
      }
      case StackOperandClass::CharLit: {
        char v;
        if (!parse_char_literal(line.tokens[1], v)) {
          throw ParseError(ErrorKind::MalformedOperand,
                           "expected char literal, got '" + std::string(line.tokens[1]) + "'",
                           line.number);
        }
        instr = StackInstr::with_char(*opcode, v);
        break;
      }
      case StackOperandClass::BoolLit: {
        std::string_view tok = line.tokens[1];
        bool v;
        if (tok == "0" || tok == "false") {
          v = false;
        } else if (tok == "1" || tok == "true") {
          v = true;
        } else {
          throw ParseError(ErrorKind::MalformedOperand,
                           "expected 0/1/true/false, got '" + std::string(tok) + "'", line.number);
        }
        instr = StackInstr::with_bool(*opcode, v);
        break;
      }
      case StackOperandClass::LineIndex: {
        std::uint32_t target;
        if (!parse_uint32(line.tokens[1], target)) {
          throw ParseError(ErrorKind::MalformedOperand,
                           "expected non-negative line index, got '" +
                               std::string(line.tokens[1]) + "'",
                           line.number);
        }
        instr = StackInstr::with_line(*opcode, target);
        jumps.push_back({program.procedures.size() - 1, proc.instrs.size(), target, line.number});
        break;
      }
      case StackOperandClass::ProcedureName: {
        const std::int64_t target = find_procedure(line.tokens[1]);
        if (target < 0) {
          throw ParseError(ErrorKind::UnknownProcedure,
                           "'" + std::string(line.tokens[1]) + "' is not declared", line.number);
        }
        instr = StackInstr::with_proc(*opcode, static_cast<std::uint32_t>(target));
        break;
      }
    }
    proc.instrs.push_back(instr);
  }

  for (const auto& jump : jumps) {
    const std::size_t count = program.procedures[jump.proc].instrs.size();
    if (jump.target >= count) {
      throw ParseError(ErrorKind::JumpOutOfRange,
                       "target " + std::to_string(jump.target) + " outside procedure '" +
                           program.procedures[jump.proc].name + "' (" + std::to_string(count) +
                           " lines)",
                       jump.source_line);
    }
  }

  return program;
}

}  // namespace vmlab
