#pragma once

#include <string>

#include "rpsl/syntax/ast.hpp"

namespace rpsl::syntax {

/// Canonical source form. Re-parsing the output yields a structurally equal
/// AST. Keywords are emitted in lowercase (`and`, `or`), numbers in their
/// shortest round-tripping fixed notation with the unit attached (`20mm`).
std::string print(const ast::Ast& ast);

std::string print(const ast::ConditionExpr& cond);
std::string print(const ast::NumberLiteral& n);
std::string format_number(double value);

}  // namespace rpsl::syntax
