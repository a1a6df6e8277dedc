#include "rpsl/syntax/lexer.hpp"

namespace rpsl::syntax {
namespace {

bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

class Lexer {
 public:
  Lexer(std::string_view text, FileId file) : text_(text), file_(file) {}

  LexResult run() {
    LexResult out;
    while (true) {
      skip_trivia();
      if (pos_ >= text_.size()) break;
      const std::size_t start = pos_;
      const auto line = line_;
      const auto col = column_;
      const char c = text_[pos_];
      TokenKind kind;
      if (is_ident_start(c)) {
        while (pos_ < text_.size() && is_ident_char(text_[pos_])) advance();
        kind = TokenKind::Identifier;
      } else if (is_digit(c) || ((c == '-' || c == '+') && pos_ + 1 < text_.size() && is_digit(text_[pos_ + 1]))) {
        advance();
        while (pos_ < text_.size() && is_digit(text_[pos_])) advance();
        if (pos_ + 1 < text_.size() && text_[pos_] == '.' && is_digit(text_[pos_ + 1])) {
          advance();
          while (pos_ < text_.size() && is_digit(text_[pos_])) advance();
        }
        kind = TokenKind::Number;
      } else if (c == '=' || c == '!' || c == '<' || c == '>') {
        const bool followed_by_eq = pos_ + 1 < text_.size() && text_[pos_ + 1] == '=';
        if ((c == '=' || c == '!') && !followed_by_eq) {
          advance();
          out.diagnostics.push_back(make_error(codes::LexicalError,
                                               std::string("unexpected character '") + c + "'",
                                               span_from(start, line, col)));
          continue;
        }
        advance();
        if (followed_by_eq) advance();
        kind = TokenKind::RelOp;
      } else {
        switch (c) {
          case ':': kind = TokenKind::Colon; break;
          case ',': kind = TokenKind::Comma; break;
          case '.': kind = TokenKind::Dot; break;
          case '{': kind = TokenKind::LBrace; break;
          case '}': kind = TokenKind::RBrace; break;
          case '(': kind = TokenKind::LParen; break;
          case ')': kind = TokenKind::RParen; break;
          default: {
            // Consume a whole UTF-8 sequence so the diagnostic covers one character.
            advance();
            while (pos_ < text_.size() && (static_cast<unsigned char>(text_[pos_]) & 0xC0) == 0x80) {
              ++pos_;
            }
            out.diagnostics.push_back(make_error(
                codes::LexicalError,
                "unexpected character '" + std::string(text_.substr(start, pos_ - start)) + "'",
                span_from(start, line, col)));
            continue;
          }
        }
        advance();
      }
      out.tokens.push_back(Token{kind, text_.substr(start, pos_ - start), span_from(start, line, col)});
    }
    out.tokens.push_back(Token{TokenKind::End, {}, span_from(pos_, line_, column_)});
    return out;
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else if ((static_cast<unsigned char>(text_[pos_]) & 0xC0) != 0x80) {
      ++column_;
    }
    ++pos_;
  }

  void skip_trivia() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v') {
        advance();
      } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  Span span_from(std::size_t start, std::uint32_t line, std::uint32_t col) const {
    return Span{file_, start, pos_, line, col};
  }

  std::string_view text_;
  FileId file_;
  std::size_t pos_ = 0;
  std::uint32_t line_ = 1;
  std::uint32_t column_ = 1;
};

}  // namespace

LexResult tokenize(std::string_view text, FileId file) { return Lexer(text, file).run(); }

}  // namespace rpsl::syntax
