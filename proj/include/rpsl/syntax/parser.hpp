#pragma once

#include <string_view>
#include <vector>

#include "rpsl/diagnostic.hpp"
#include "rpsl/syntax/ast.hpp"

namespace rpsl::syntax {

struct ParseResult {
  ast::Ast ast;
  std::vector<Diagnostic> diagnostics;
};

/// Parses one RPSL source file.
///
/// Never throws on malformed input: every problem becomes a diagnostic and
/// the parser resynchronises at the next top-level declaration (or the next
/// concept, inside a namespace). The returned AST holds only declarations
/// that parsed cleanly.
ParseResult parse_source(std::string_view text, FileId file = 0);

/// True for the unit tokens the grammar accepts after a number.
bool is_unit_token(std::string_view word);

}  // namespace rpsl::syntax
