#include "rpsl/syntax/printer.hpp"

#include <array>
#include <charconv>
#include <sstream>

namespace rpsl::syntax {
namespace {

using namespace rpsl::ast;

constexpr std::string_view indent1 = "    ";

void print_point(std::ostringstream& os, const PointEntry& p, int depth) {
  for (int i = 0; i < depth; ++i) os << indent1;
  os << "Point(" << p.dimension.joined() << ", " << print(p.value) << ")\n";
}

void print_condition(std::ostringstream& os, const ConditionExpr& c) {
  std::visit(
      [&os](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Comparison>) {
          if (const auto* q = std::get_if<QualifiedName>(&n.lhs)) {
            os << q->joined();
          } else {
            os << "Similarity(" << std::get<SimilarityCall>(n.lhs).measure.text << ")";
          }
          os << ' ' << to_string(n.op) << ' ' << print(n.rhs);
        } else if constexpr (std::is_same_v<T, AndExpr>) {
          print_condition(os, *n.left);
          os << " and ";
          print_condition(os, *n.right);
        } else if constexpr (std::is_same_v<T, OrExpr>) {
          print_condition(os, *n.left);
          os << " or ";
          print_condition(os, *n.right);
        } else {
          os << '(';
          print_condition(os, *n.inner);
          os << ')';
        }
      },
      c.node);
}

}  // namespace

std::string format_number(double value) {
  std::array<char, 512> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::fixed);
  if (ec != std::errc{}) return "0";
  return std::string(buf.data(), end);
}

std::string print(const NumberLiteral& n) {
  std::string out = format_number(n.value);
  if (n.unit) out += *n.unit;
  return out;
}

std::string print(const ConditionExpr& cond) {
  std::ostringstream os;
  print_condition(os, cond);
  return os.str();
}

std::string print(const Ast& ast) {
  std::ostringstream os;
  bool first_block = true;
  auto separate = [&] {
    if (!first_block) os << '\n';
    first_block = false;
  };

  if (!ast.uses.empty()) {
    separate();
    for (const auto& u : ast.uses) os << "use Namespace " << u.ns.text << '\n';
  }
  for (const auto& d : ast.domains) {
    separate();
    os << "domain " << d.name.text << " {\n";
    for (const auto& dim : d.dimensions) {
      os << indent1 << dim.name.text << ": " << (dim.scale == Scale::Continuous ? "continuous" : "ordinal");
      if (dim.unit) os << ' ' << dim.unit->text;
      os << '\n';
    }
    os << "}\n";
  }
  for (const auto& ns : ast.namespaces) {
    separate();
    os << ns.name.text << ": Namespace {\n";
    for (const auto& c : ns.concepts) {
      os << indent1 << c.name.text << ": Concept {\n";
      for (const auto& d : c.used_domains) os << indent1 << indent1 << "use_domain " << d.joined() << '\n';
      os << indent1 << indent1 << c.polytope.label.text << ": Polytope {\n";
      for (const auto& p : c.polytope.points) print_point(os, p, 3);
      os << indent1 << indent1 << "}\n";
      os << indent1 << "}\n";
    }
    os << "}\n";
  }
  for (const auto& p : ast.prototypes) {
    separate();
    os << p.name.text << ": Prototype {\n";
    os << indent1 << "use_concept " << p.concept_ref.joined() << '\n';
    os << indent1 << p.values_label.text << ": Values {\n";
    for (const auto& v : p.values) print_point(os, v, 2);
    os << indent1 << "}\n";
    os << "}\n";
  }
  for (const auto& s : ast.specifications) {
    separate();
    os << s.name.text << ": Specification {\n";
    if (const auto* d = std::get_if<DataBlock>(&s.body)) {
      os << indent1 << d->label.text << ": Data {\n";
      os << indent1 << indent1 << "get " << to_string(d->selector) << " from " << d->target.joined();
      if (d->condition) {
        os << " where ";
        print_condition(os, *d->condition);
      }
      if (d->deadline) os << " ensure Deadline(" << print(d->deadline->value) << ')';
      os << '\n' << indent1 << "}\n";
    } else {
      const auto& g = std::get<DependencyGraphDecl>(s.body);
      os << indent1 << g.label.text << ": DependencyGraph {\n";
      for (const auto& e : g.edges) os << indent1 << indent1 << e.from.text << " before " << e.to.text << '\n';
      os << indent1 << "}\n";
    }
    os << "}\n";
  }
  return os.str();
}

}  // namespace rpsl::syntax
