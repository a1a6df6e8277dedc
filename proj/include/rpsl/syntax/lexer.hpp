#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rpsl/diagnostic.hpp"

namespace rpsl::syntax {

enum class TokenKind {
  Identifier,
  Number,
  Colon,
  Comma,
  Dot,
  LBrace,
  RBrace,
  LParen,
  RParen,
  RelOp,
  End,
};

struct Token {
  TokenKind kind = TokenKind::End;
  std::string_view text;
  Span span;
};

struct LexResult {
  std::vector<Token> tokens;  // always terminated by an End token
  std::vector<Diagnostic> diagnostics;
};

/// Splits source text into tokens. `//` comments and whitespace are dropped.
/// Unknown characters produce a P001 diagnostic and are skipped. Token text
/// views point into `text`, which must outlive the result.
LexResult tokenize(std::string_view text, FileId file);

}  // namespace rpsl::syntax
