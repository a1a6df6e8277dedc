#pragma once

// Purely syntactic tree of one RPSL compilation unit. Names are kept exactly
// as written; resolution happens in the analyzer.

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rpsl/diagnostic.hpp"

namespace rpsl::ast {

struct Identifier {
  std::string text;
  Span span;
};

/// Dotted name such as `myConcepts.myBox` or `myBox.Size.Width`.
struct QualifiedName {
  std::vector<std::string> parts;
  Span span;

  std::string joined() const;
};

/// Numeric literal with its optional unit suffix (`20mm`, `3 s`, `0`).
struct NumberLiteral {
  double value = 0.0;
  std::optional<std::string> unit;
  Span span;
};

struct UseDirective {
  Identifier ns;
  Span span;
};

struct PointEntry {
  QualifiedName dimension;
  NumberLiteral value;
  Span span;
};

struct PolytopeDecl {
  Identifier label;
  std::vector<PointEntry> points;
  Span span;
};

struct ConceptDecl {
  Identifier name;
  std::vector<QualifiedName> used_domains;
  PolytopeDecl polytope;
  Span span;
};

struct NamespaceDecl {
  Identifier name;
  std::vector<ConceptDecl> concepts;
  Span span;
};

enum class Scale { Continuous, Ordinal };

struct DimensionDecl {
  Identifier name;
  Scale scale = Scale::Continuous;
  std::optional<Identifier> unit;
  Span span;
};

struct DomainDecl {
  Identifier name;
  std::vector<DimensionDecl> dimensions;
  Span span;
};

struct PrototypeDecl {
  Identifier name;
  QualifiedName concept_ref;
  Identifier values_label;
  std::vector<PointEntry> values;
  Span span;
};

enum class Selector { Amount, Pose };
enum class RelOp { Eq, Ne, Lt, Le, Gt, Ge };

std::string_view to_string(Selector s);
std::string_view to_string(RelOp op);

struct SimilarityCall {
  Identifier measure;
  Span span;
};

struct Comparison {
  std::variant<QualifiedName, SimilarityCall> lhs;
  RelOp op = RelOp::Eq;
  NumberLiteral rhs;
};

struct ConditionExpr;
using ConditionPtr = std::shared_ptr<const ConditionExpr>;

struct AndExpr {
  ConditionPtr left;
  ConditionPtr right;
};

struct OrExpr {
  ConditionPtr left;
  ConditionPtr right;
};

struct ParenExpr {
  ConditionPtr inner;
};

struct ConditionExpr {
  std::variant<Comparison, AndExpr, OrExpr, ParenExpr> node;
  Span span;
};

struct DeadlineClause {
  NumberLiteral value;  // unit always present after a successful parse
  Span span;
};

struct DataBlock {
  Identifier label;
  Selector selector = Selector::Amount;
  QualifiedName target;
  ConditionPtr condition;  // null when no `where` clause
  std::optional<DeadlineClause> deadline;
  Span span;
};

struct DependencyEdge {
  Identifier from;
  Identifier to;
  Span span;
};

struct DependencyGraphDecl {
  Identifier label;
  std::vector<DependencyEdge> edges;
  Span span;
};

struct SpecificationDecl {
  Identifier name;
  std::variant<DataBlock, DependencyGraphDecl> body;
  Span span;
};

struct Ast {
  std::vector<UseDirective> uses;
  std::vector<NamespaceDecl> namespaces;
  std::vector<PrototypeDecl> prototypes;
  std::vector<SpecificationDecl> specifications;
  std::vector<DomainDecl> domains;
};

/// Concatenates the declarations of several units, in argument order.
Ast merge(std::vector<Ast> units);

/// Structural equality: compares names, values and tree shape, ignores spans.
bool structurally_equal(const Ast& a, const Ast& b);

}  // namespace rpsl::ast
