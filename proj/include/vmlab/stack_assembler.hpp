#pragma once

#include <string_view>

#include "vmlab/stack_program.hpp"

namespace vmlab {

/// Two-phase assembler for `.fng` text. Phase 1 collects `procedure <name>`
/// headers in order; phase 2 parses instructions, resolving `call <name>` to
/// the procedure's index and jump operands to 0-based line indices within the
/// enclosing procedure (line 0 = first instruction after the header).
///
/// Lines are whitespace-tokenized; blank lines and `;` comments (to end of
/// line) are ignored. The first procedure must be `main`.
StackProgram parse_stack_source(std::string_view text);

}  // namespace vmlab
