#include "rpsl/syntax/parser.hpp"

#include <array>
#include <charconv>
#include <string>
#include <utility>

#include "rpsl/syntax/lexer.hpp"

namespace rpsl::syntax {

bool is_unit_token(std::string_view word) {
  static constexpr std::array<std::string_view, 6> units = {"mm", "cm", "m", "ms", "s", "min"};
  for (auto u : units) {
    if (u == word) return true;
  }
  return false;
}

namespace {

using namespace rpsl::ast;

struct Failure {
  Diagnostic diag;
};

std::string describe(const Token& t) {
  if (t.kind == TokenKind::End) return "end of input";
  return "'" + std::string(t.text) + "'";
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::vector<Diagnostic> diags)
      : toks_(std::move(tokens)), diags_(std::move(diags)) {}

  ParseResult run() {
    Ast ast;
    while (!at(TokenKind::End)) {
      const std::size_t start = pos_;
      try {
        parse_top_item(ast);
      } catch (const Failure& f) {
        diags_.push_back(f.diag);
        recover(start, /*top_level=*/true);
      }
    }
    return ParseResult{std::move(ast), std::move(diags_)};
  }

 private:
  // ---------------------------------------------------------------- tokens

  const Token& peek(std::size_t k = 0) const {
    const std::size_t i = pos_ + k;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  bool at(TokenKind kind, std::size_t k = 0) const { return peek(k).kind == kind; }
  bool at_word(std::string_view word, std::size_t k = 0) const {
    return peek(k).kind == TokenKind::Identifier && peek(k).text == word;
  }
  const Token& take() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  const Token& previous() const { return toks_[pos_ == 0 ? 0 : pos_ - 1]; }

  [[noreturn]] void fail(std::string_view code, std::string message, Span span) const {
    throw Failure{make_error(code, std::move(message), span)};
  }
  [[noreturn]] void fail_expected(std::string_view what) const {
    if (at(TokenKind::End) && what == "'}'") {
      fail(codes::UnbalancedBraces, "unbalanced braces: expected '}' before end of input", peek().span);
    }
    fail(codes::UnexpectedToken, "expected " + std::string(what) + ", found " + describe(peek()), peek().span);
  }

  const Token& expect(TokenKind kind, std::string_view what) {
    if (!at(kind)) fail_expected(what);
    return take();
  }
  void expect_word(std::string_view word) {
    if (!at_word(word)) fail_expected("'" + std::string(word) + "'");
    take();
  }
  Identifier expect_ident(std::string_view what) {
    const Token& t = expect(TokenKind::Identifier, what);
    return Identifier{std::string(t.text), t.span};
  }

  // Start of a top-level declaration, used as a resynchronisation point.
  bool at_top_level_start() const {
    if (at_word("use") && at_word("Namespace", 1)) return true;
    if (at_word("domain") && at(TokenKind::Identifier, 1) && at(TokenKind::LBrace, 2)) return true;
    return at(TokenKind::Identifier) && at(TokenKind::Colon, 1) &&
           (at_word("Namespace", 2) || at_word("Prototype", 2) || at_word("Specification", 2)) &&
           at(TokenKind::LBrace, 3);
  }

  // Skip the rest of a failed item. Braces opened since `start` are closed
  // first; stops early at anything that looks like a new top-level item.
  void recover(std::size_t start, bool top_level) {
    std::vector<Span> open;
    for (std::size_t i = start; i < pos_; ++i) {
      if (toks_[i].kind == TokenKind::LBrace) open.push_back(toks_[i].span);
      if (toks_[i].kind == TokenKind::RBrace && !open.empty()) open.pop_back();
    }
    if (pos_ == start) {
      // The very first token was bad; always make progress.
      if (at(TokenKind::RBrace) && !top_level) return;
      if (at(TokenKind::LBrace)) open.push_back(peek().span);
      take();
      if (open.empty()) {
        // Consume a stray word or punctuation run up to something we can use.
        while (!at(TokenKind::End) && !at_top_level_start() && !at(TokenKind::LBrace) &&
               !at(TokenKind::RBrace)) {
          if (!top_level && at(TokenKind::Identifier) && at(TokenKind::Colon, 1)) return;
          take();
        }
        if (top_level && at(TokenKind::RBrace)) {
          diags_.push_back(make_error(codes::UnbalancedBraces, "unmatched '}'", peek().span));
          take();
        }
        return;
      }
    }
    while (!at(TokenKind::End)) {
      if (at_top_level_start()) return;
      if (at(TokenKind::LBrace)) {
        open.push_back(peek().span);
      } else if (at(TokenKind::RBrace)) {
        if (open.empty()) {
          if (!top_level) return;
          diags_.push_back(make_error(codes::UnbalancedBraces, "unmatched '}'", peek().span));
        } else {
          open.pop_back();
          if (open.empty()) {
            take();
            return;
          }
        }
      }
      take();
    }
    if (!open.empty() && top_level) {
      // Replace the generic end-of-input complaint with one naming the brace.
      if (!diags_.empty() && diags_.back().code == codes::UnbalancedBraces &&
          diags_.back().span.start == peek().span.start) {
        diags_.pop_back();
      }
      diags_.push_back(make_error(codes::UnbalancedBraces, "unbalanced braces: '{' is never closed", open.front()));
    }
  }

  // ------------------------------------------------------------- top level

  void parse_top_item(Ast& ast) {
    if (at(TokenKind::RBrace)) fail(codes::UnbalancedBraces, "unmatched '}'", peek().span);
    if (at_word("use") && !at(TokenKind::Colon, 1)) {
      const Span start = take().span;
      expect_word("Namespace");
      Identifier ns = expect_ident("a namespace name");
      ast.uses.push_back(UseDirective{ns, merge(start, ns.span)});
      return;
    }
    if (at_word("domain") && at(TokenKind::Identifier, 1)) {
      ast.domains.push_back(parse_domain());
      return;
    }
    if (!(at(TokenKind::Identifier) && at(TokenKind::Colon, 1))) fail_expected("a declaration");
    const std::size_t kind_pos = 2;
    if (at_word("Namespace", kind_pos)) {
      ast.namespaces.push_back(parse_namespace());
    } else if (at_word("Prototype", kind_pos)) {
      if (auto p = parse_prototype()) ast.prototypes.push_back(std::move(*p));
    } else if (at_word("Specification", kind_pos)) {
      if (auto s = parse_specification()) ast.specifications.push_back(std::move(*s));
    } else if (at_word("Concept", kind_pos)) {
      // Parsed anyway so that errors inside the block are reported too.
      const Span name_span = peek().span;
      parse_concept();
      diags_.push_back(make_error(codes::StructureError, "Concept must be declared inside a Namespace", name_span));
    } else {
      pos_ += kind_pos;
      fail_expected("Namespace, Prototype or Specification");
    }
  }

  // ----------------------------------------------------------- object domain

  DomainDecl parse_domain() {
    const Span start = take().span;
    DomainDecl d;
    d.name = expect_ident("a domain name");
    expect(TokenKind::LBrace, "'{'");
    while (at(TokenKind::Identifier)) {
      DimensionDecl dim;
      dim.name = expect_ident("a dimension name");
      expect(TokenKind::Colon, "':'");
      if (at_word("continuous")) {
        dim.scale = Scale::Continuous;
      } else if (at_word("ordinal")) {
        dim.scale = Scale::Ordinal;
      } else {
        fail_expected("'continuous' or 'ordinal'");
      }
      dim.span = merge(dim.name.span, take().span);
      // A unit word followed by ':' starts the next dimension instead.
      if (at(TokenKind::Identifier) && is_unit_token(peek().text) && !at(TokenKind::Colon, 1)) {
        const Token& u = take();
        dim.unit = Identifier{std::string(u.text), u.span};
        dim.span = merge(dim.span, u.span);
      }
      d.dimensions.push_back(std::move(dim));
    }
    const Span end = expect(TokenKind::RBrace, "'}'").span;
    d.span = merge(start, end);
    if (d.dimensions.empty()) {
      fail(codes::StructureError, "domain '" + d.name.text + "' requires at least one dimension", d.name.span);
    }
    return d;
  }

  NamespaceDecl parse_namespace() {
    NamespaceDecl ns;
    ns.name = expect_ident("a namespace name");
    take();  // ':'
    take();  // Namespace
    expect(TokenKind::LBrace, "'{'");
    while (at(TokenKind::Identifier)) {
      const std::size_t start = pos_;
      try {
        if (!(at(TokenKind::Colon, 1) && at_word("Concept", 2))) {
          if (at(TokenKind::Colon, 1)) {
            pos_ += 2;
            fail_expected("'Concept'");
          }
          fail_expected("a concept declaration");
        }
        if (auto c = parse_concept()) ns.concepts.push_back(std::move(*c));
      } catch (const Failure& f) {
        diags_.push_back(f.diag);
        recover(start, /*top_level=*/false);
        if (at_top_level_start()) {
          fail(codes::UnbalancedBraces, "unbalanced braces: namespace '" + ns.name.text + "' is never closed",
               ns.name.span);
        }
      }
    }
    const Span end = expect(TokenKind::RBrace, "'}'").span;
    ns.span = merge(ns.name.span, end);
    return ns;
  }

  // Returns nullopt (with a diagnostic already recorded) when the concept is
  // syntactically complete but structurally invalid.
  std::optional<ConceptDecl> parse_concept() {
    ConceptDecl c;
    c.name = expect_ident("a concept name");
    take();  // ':'
    take();  // Concept
    expect(TokenKind::LBrace, "'{'");
    while (at_word("use_domain")) {
      take();
      c.used_domains.push_back(parse_qname("a domain name"));
    }
    bool has_polytope = false;
    while (at(TokenKind::Identifier) && at(TokenKind::Colon, 1)) {
      if (!at_word("Polytope", 2)) {
        pos_ += 2;
        fail_expected("'Polytope'");
      }
      if (has_polytope) {
        fail(codes::StructureError, "concept '" + c.name.text + "' has more than one Polytope block", peek().span);
      }
      c.polytope = parse_polytope();
      has_polytope = true;
    }
    const Span end = expect(TokenKind::RBrace, "'}'").span;
    c.span = merge(c.name.span, end);
    bool ok = true;
    if (c.used_domains.empty()) {
      diags_.push_back(make_error(codes::StructureError, "concept requires at least one use_domain", c.name.span));
      ok = false;
    }
    if (!has_polytope) {
      diags_.push_back(make_error(codes::StructureError, "concept requires a Polytope block", c.name.span));
      ok = false;
    } else if (c.polytope.points.empty()) {
      diags_.push_back(
          make_error(codes::StructureError, "Polytope requires at least one Point", c.polytope.label.span));
      ok = false;
    }
    if (!ok) return std::nullopt;
    return c;
  }

  PolytopeDecl parse_polytope() {
    PolytopeDecl p;
    p.label = expect_ident("a polytope label");
    take();  // ':'
    take();  // Polytope
    expect(TokenKind::LBrace, "'{'");
    while (at_word("Point")) p.points.push_back(parse_point());
    const Span end = expect(TokenKind::RBrace, "'}'").span;
    p.span = merge(p.label.span, end);
    return p;
  }

  PointEntry parse_point() {
    const Span start = take().span;
    try {
      expect(TokenKind::LParen, "'('");
      PointEntry e;
      e.dimension = parse_qname("a dimension path");
      if (e.dimension.parts.size() < 2 || e.dimension.parts.size() > 3) {
        fail(codes::MalformedPoint, "dimension path '" + e.dimension.joined() + "' must have 2 or 3 segments",
             e.dimension.span);
      }
      expect(TokenKind::Comma, "','");
      e.value = parse_number();
      const Span end = expect(TokenKind::RParen, "')'").span;
      e.span = merge(start, end);
      return e;
    } catch (Failure& f) {
      if (f.diag.code == codes::UnexpectedToken) {
        f.diag.code = std::string(codes::MalformedPoint);
        f.diag.message = "malformed Point argument list: " + f.diag.message;
      }
      throw;
    }
  }

  std::optional<PrototypeDecl> parse_prototype() {
    PrototypeDecl p;
    p.name = expect_ident("a prototype name");
    take();  // ':'
    take();  // Prototype
    expect(TokenKind::LBrace, "'{'");
    expect_word("use_concept");
    p.concept_ref = parse_qname("a concept name");
    p.values_label = expect_ident("a Values label");
    expect(TokenKind::Colon, "':'");
    expect_word("Values");
    expect(TokenKind::LBrace, "'{'");
    while (at_word("Point")) p.values.push_back(parse_point());
    expect(TokenKind::RBrace, "'}'");
    const Span end = expect(TokenKind::RBrace, "'}'").span;
    p.span = merge(p.name.span, end);
    if (p.values.empty()) {
      diags_.push_back(make_error(codes::StructureError, "Values requires at least one Point", p.values_label.span));
      return std::nullopt;
    }
    return p;
  }

  // ------------------------------------------------------- composition domain

  std::optional<SpecificationDecl> parse_specification() {
    SpecificationDecl s;
    s.name = expect_ident("a specification name");
    take();  // ':'
    take();  // Specification
    expect(TokenKind::LBrace, "'{'");
    if (!(at(TokenKind::Identifier) && at(TokenKind::Colon, 1))) fail_expected("a Data or DependencyGraph block");
    bool ok = true;
    if (at_word("Data", 2)) {
      s.body = parse_data_block();
    } else if (at_word("DependencyGraph", 2)) {
      auto g = parse_dependency_graph();
      ok = !g.edges.empty();
      s.body = std::move(g);
    } else {
      pos_ += 2;
      fail_expected("'Data' or 'DependencyGraph'");
    }
    const Span end = expect(TokenKind::RBrace, "'}'").span;
    s.span = merge(s.name.span, end);
    if (!ok) return std::nullopt;
    return s;
  }

  DataBlock parse_data_block() {
    DataBlock d;
    d.label = expect_ident("a Data label");
    take();  // ':'
    take();  // Data
    expect(TokenKind::LBrace, "'{'");
    expect_word("get");
    if (at_word("Amount")) {
      d.selector = Selector::Amount;
    } else if (at_word("Pose")) {
      d.selector = Selector::Pose;
    } else {
      fail_expected("'Amount' or 'Pose'");
    }
    take();
    expect_word("from");
    d.target = parse_qname("a concept or prototype name");
    if (at_word("where")) {
      take();
      d.condition = parse_or();
    }
    if (at_word("ensure")) d.deadline = parse_deadline();
    const Span end = expect(TokenKind::RBrace, "'}'").span;
    d.span = merge(d.label.span, end);
    return d;
  }

  DeadlineClause parse_deadline() {
    const Span start = take().span;
    try {
      expect_word("Deadline");
      expect(TokenKind::LParen, "'('");
      DeadlineClause dl;
      dl.value = parse_number();
      if (!dl.value.unit) {
        fail(codes::MalformedDeadline, "Deadline requires a time unit (ms, s or min)", dl.value.span);
      }
      if (!(dl.value.value > 0.0)) {
        fail(codes::MalformedDeadline, "Deadline value must be positive", dl.value.span);
      }
      const Span end = expect(TokenKind::RParen, "')'").span;
      dl.span = merge(start, end);
      return dl;
    } catch (Failure& f) {
      if (f.diag.code == codes::UnexpectedToken) {
        f.diag.code = std::string(codes::MalformedDeadline);
        f.diag.message = "malformed Deadline: " + f.diag.message;
      }
      throw;
    }
  }

  bool at_or() const { return at_word("or") || at_word("OR"); }
  bool at_and() const { return at_word("and") || at_word("AND"); }

  ConditionPtr parse_or() {
    ConditionPtr left = parse_and();
    while (at_or()) {
      take();
      ConditionPtr right = parse_and();
      const Span span = merge(left->span, right->span);
      left = std::make_shared<const ConditionExpr>(ConditionExpr{OrExpr{left, right}, span});
    }
    return left;
  }

  ConditionPtr parse_and() {
    ConditionPtr left = parse_atom();
    while (at_and()) {
      take();
      ConditionPtr right = parse_atom();
      const Span span = merge(left->span, right->span);
      left = std::make_shared<const ConditionExpr>(ConditionExpr{AndExpr{left, right}, span});
    }
    return left;
  }

  ConditionPtr parse_atom() {
    if (at(TokenKind::LParen)) {
      const Span start = take().span;
      ConditionPtr inner = parse_or();
      const Span end = expect(TokenKind::RParen, "')'").span;
      return std::make_shared<const ConditionExpr>(ConditionExpr{ParenExpr{inner}, merge(start, end)});
    }
    Comparison cmp;
    Span start;
    if (at_word("Similarity") && at(TokenKind::LParen, 1)) {
      start = take().span;
      take();
      SimilarityCall call;
      call.measure = expect_ident("a similarity measure");
      call.span = merge(start, expect(TokenKind::RParen, "')'").span);
      cmp.lhs = call;
    } else {
      if (!at(TokenKind::Identifier)) fail_expected("a condition");
      QualifiedName q = parse_qname("a dimension path");
      start = q.span;
      cmp.lhs = std::move(q);
    }
    const Token& op = expect(TokenKind::RelOp, "a relational operator");
    cmp.op = parse_relop(op.text);
    cmp.rhs = parse_number();
    const Span span = merge(start, cmp.rhs.span);
    return std::make_shared<const ConditionExpr>(ConditionExpr{std::move(cmp), span});
  }

  static RelOp parse_relop(std::string_view t) {
    if (t == "==") return RelOp::Eq;
    if (t == "!=") return RelOp::Ne;
    if (t == "<=") return RelOp::Le;
    if (t == ">=") return RelOp::Ge;
    if (t == "<") return RelOp::Lt;
    return RelOp::Gt;
  }

  DependencyGraphDecl parse_dependency_graph() {
    DependencyGraphDecl g;
    g.label = expect_ident("a DependencyGraph label");
    take();  // ':'
    take();  // DependencyGraph
    expect(TokenKind::LBrace, "'{'");
    while (at(TokenKind::Identifier)) {
      DependencyEdge e;
      e.from = expect_ident("a specification name");
      expect_word("before");
      e.to = expect_ident("a specification name");
      e.span = merge(e.from.span, e.to.span);
      g.edges.push_back(std::move(e));
    }
    const Span end = expect(TokenKind::RBrace, "'}'").span;
    g.span = merge(g.label.span, end);
    if (g.edges.empty()) {
      diags_.push_back(
          make_error(codes::StructureError, "DependencyGraph requires at least one 'before' edge", g.label.span));
    }
    return g;
  }

  // ----------------------------------------------------------------- pieces

  QualifiedName parse_qname(std::string_view what) {
    QualifiedName q;
    const Token& first = expect(TokenKind::Identifier, what);
    q.parts.emplace_back(first.text);
    q.span = first.span;
    while (at(TokenKind::Dot)) {
      take();
      const Token& part = expect(TokenKind::Identifier, "an identifier after '.'");
      q.parts.emplace_back(part.text);
      q.span = merge(q.span, part.span);
    }
    return q;
  }

  NumberLiteral parse_number() {
    const Token& t = expect(TokenKind::Number, "a number");
    std::string_view digits = t.text;
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    NumberLiteral n;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n.value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
      fail(codes::UnexpectedToken, "number out of range: " + std::string(t.text), t.span);
    }
    n.span = t.span;
    if (at(TokenKind::Identifier) && is_unit_token(peek().text)) {
      const Token& u = take();
      n.unit = std::string(u.text);
      n.span = merge(n.span, u.span);
    }
    return n;
  }

  std::vector<Token> toks_;
  std::vector<Diagnostic> diags_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseResult parse_source(std::string_view text, FileId file) {
  LexResult lexed = tokenize(text, file);
  ParseResult result = Parser(std::move(lexed.tokens), std::move(lexed.diagnostics)).run();
  sort_diagnostics(result.diagnostics);
  return result;
}

}  // namespace rpsl::syntax
