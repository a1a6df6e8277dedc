#include <algorithm>

#include "rpsl/syntax/ast.hpp"

namespace rpsl::ast {

std::string QualifiedName::joined() const {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += '.';
    out += parts[i];
  }
  return out;
}

std::string_view to_string(Selector s) { return s == Selector::Amount ? "Amount" : "Pose"; }

std::string_view to_string(RelOp op) {
  switch (op) {
    case RelOp::Eq: return "==";
    case RelOp::Ne: return "!=";
    case RelOp::Lt: return "<";
    case RelOp::Le: return "<=";
    case RelOp::Gt: return ">";
    case RelOp::Ge: return ">=";
  }
  return "==";
}

Ast merge(std::vector<Ast> units) {
  Ast out;
  auto append = [](auto& dst, auto& src) {
    std::move(src.begin(), src.end(), std::back_inserter(dst));
  };
  for (auto& u : units) {
    append(out.uses, u.uses);
    append(out.namespaces, u.namespaces);
    append(out.prototypes, u.prototypes);
    append(out.specifications, u.specifications);
    append(out.domains, u.domains);
  }
  return out;
}

namespace {

bool eq(const Identifier& a, const Identifier& b) { return a.text == b.text; }
bool eq(const QualifiedName& a, const QualifiedName& b) { return a.parts == b.parts; }
bool eq(const NumberLiteral& a, const NumberLiteral& b) { return a.value == b.value && a.unit == b.unit; }
bool eq(const UseDirective& a, const UseDirective& b) { return eq(a.ns, b.ns); }
bool eq(const PointEntry& a, const PointEntry& b) { return eq(a.dimension, b.dimension) && eq(a.value, b.value); }

bool eq(const ConceptDecl& a, const ConceptDecl& b);
bool eq(const NamespaceDecl& a, const NamespaceDecl& b);
bool eq(const DimensionDecl& a, const DimensionDecl& b);
bool eq(const DomainDecl& a, const DomainDecl& b);
bool eq(const PrototypeDecl& a, const PrototypeDecl& b);
bool eq(const DeadlineClause& a, const DeadlineClause& b);
bool eq(const DependencyEdge& a, const DependencyEdge& b);
bool eq(const SpecificationDecl& a, const SpecificationDecl& b);

template <typename T>
bool eq(const std::vector<T>& a, const std::vector<T>& b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(), [](const T& x, const T& y) { return eq(x, y); });
}

template <typename T>
bool eq(const std::optional<T>& a, const std::optional<T>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || eq(*a, *b);
}

bool eq(const ConceptDecl& a, const ConceptDecl& b) {
  return eq(a.name, b.name) && eq(a.used_domains, b.used_domains) && eq(a.polytope.label, b.polytope.label) &&
         eq(a.polytope.points, b.polytope.points);
}
bool eq(const NamespaceDecl& a, const NamespaceDecl& b) { return eq(a.name, b.name) && eq(a.concepts, b.concepts); }
bool eq(const DimensionDecl& a, const DimensionDecl& b) {
  return eq(a.name, b.name) && a.scale == b.scale && eq(a.unit, b.unit);
}
bool eq(const DomainDecl& a, const DomainDecl& b) { return eq(a.name, b.name) && eq(a.dimensions, b.dimensions); }
bool eq(const PrototypeDecl& a, const PrototypeDecl& b) {
  return eq(a.name, b.name) && eq(a.concept_ref, b.concept_ref) && eq(a.values_label, b.values_label) &&
         eq(a.values, b.values);
}

bool eq(const ConditionExpr& a, const ConditionExpr& b);

bool eq(const ConditionPtr& a, const ConditionPtr& b) {
  if (!a || !b) return !a && !b;
  return eq(*a, *b);
}

bool eq(const ConditionExpr& a, const ConditionExpr& b) {
  if (a.node.index() != b.node.index()) return false;
  if (const auto* ca = std::get_if<Comparison>(&a.node)) {
    const auto& cb = std::get<Comparison>(b.node);
    if (ca->lhs.index() != cb.lhs.index() || ca->op != cb.op || !eq(ca->rhs, cb.rhs)) return false;
    if (const auto* qa = std::get_if<QualifiedName>(&ca->lhs)) return eq(*qa, std::get<QualifiedName>(cb.lhs));
    return eq(std::get<SimilarityCall>(ca->lhs).measure, std::get<SimilarityCall>(cb.lhs).measure);
  }
  if (const auto* x = std::get_if<AndExpr>(&a.node)) {
    const auto& y = std::get<AndExpr>(b.node);
    return eq(x->left, y.left) && eq(x->right, y.right);
  }
  if (const auto* x = std::get_if<OrExpr>(&a.node)) {
    const auto& y = std::get<OrExpr>(b.node);
    return eq(x->left, y.left) && eq(x->right, y.right);
  }
  return eq(std::get<ParenExpr>(a.node).inner, std::get<ParenExpr>(b.node).inner);
}

bool eq(const DeadlineClause& a, const DeadlineClause& b) { return eq(a.value, b.value); }

bool eq(const DependencyEdge& a, const DependencyEdge& b) { return eq(a.from, b.from) && eq(a.to, b.to); }

bool eq(const SpecificationDecl& a, const SpecificationDecl& b) {
  if (!eq(a.name, b.name) || a.body.index() != b.body.index()) return false;
  if (const auto* da = std::get_if<DataBlock>(&a.body)) {
    const auto& db = std::get<DataBlock>(b.body);
    return eq(da->label, db.label) && da->selector == db.selector && eq(da->target, db.target) &&
           eq(da->condition, db.condition) && eq(da->deadline, db.deadline);
  }
  const auto& ga = std::get<DependencyGraphDecl>(a.body);
  const auto& gb = std::get<DependencyGraphDecl>(b.body);
  return eq(ga.label, gb.label) && eq(ga.edges, gb.edges);
}

}  // namespace

bool structurally_equal(const Ast& a, const Ast& b) {
  return eq(a.uses, b.uses) && eq(a.namespaces, b.namespaces) && eq(a.prototypes, b.prototypes) &&
         eq(a.specifications, b.specifications) && eq(a.domains, b.domains);
}

}  // namespace rpsl::ast
