#include <cmath>
#include <limits>
#include <set>

#include "rpsl/analyzer/analyzer.hpp"
#include "rpsl/syntax/printer.hpp"

namespace rpsl::analysis {
namespace {

using model::DimensionKey;

constexpr double inf = std::numeric_limits<double>::infinity();
constexpr std::size_t max_conjunctions = 4096;

std::string format_value(double base_value, model::UnitKind kind) {
  std::string out = syntax::format_number(base_value);
  if (kind != model::UnitKind::Dimensionless) out += std::string(model::base_unit(kind).symbol);
  return out;
}

// Disjunctive normal form as lists of comparisons. nullopt when the
// expansion would exceed max_conjunctions.
using Conjunction = std::vector<const ResolvedComparison*>;

std::optional<std::vector<Conjunction>> to_dnf(const ResolvedCondition& cond) {
  if (const auto* cmp = std::get_if<ResolvedComparison>(&cond.node)) return std::vector<Conjunction>{{cmp}};
  if (const auto* o = std::get_if<ResolvedOr>(&cond.node)) {
    auto l = to_dnf(*o->left);
    auto r = to_dnf(*o->right);
    if (!l || !r || l->size() + r->size() > max_conjunctions) return std::nullopt;
    l->insert(l->end(), r->begin(), r->end());
    return l;
  }
  const auto& a = std::get<ResolvedAnd>(cond.node);
  auto l = to_dnf(*a.left);
  auto r = to_dnf(*a.right);
  if (!l || !r || l->size() * r->size() > max_conjunctions) return std::nullopt;
  std::vector<Conjunction> out;
  for (const auto& x : *l) {
    for (const auto& y : *r) {
      Conjunction c = x;
      c.insert(c.end(), y.begin(), y.end());
      out.push_back(std::move(c));
    }
  }
  return out;
}

struct Bound {
  double value;
  bool open;
};

// Feasible set of one variable: the domain interval cut by every comparison.
class Feasibility {
 public:
  Feasibility(double lo, double hi, bool ordinal) : lo_{lo, false}, hi_{hi, false}, ordinal_(ordinal) {}

  void apply(ast::RelOp op, double c) {
    switch (op) {
      case ast::RelOp::Eq:
        raise_lo({c, false});
        lower_hi({c, false});
        break;
      case ast::RelOp::Ne: excluded_.insert(c); break;
      case ast::RelOp::Lt: lower_hi({c, true}); break;
      case ast::RelOp::Le: lower_hi({c, false}); break;
      case ast::RelOp::Gt: raise_lo({c, true}); break;
      case ast::RelOp::Ge: raise_lo({c, false}); break;
    }
  }

  bool satisfiable() const { return ordinal_ ? integer_satisfiable() : real_satisfiable(); }

 private:
  void raise_lo(Bound b) {
    if (b.value > lo_.value || (b.value == lo_.value && b.open)) lo_ = b;
  }
  void lower_hi(Bound b) {
    if (b.value < hi_.value || (b.value == hi_.value && b.open)) hi_ = b;
  }

  bool real_satisfiable() const {
    if (lo_.value < hi_.value) return true;  // uncountably many points, finitely many excluded
    return lo_.value == hi_.value && !lo_.open && !hi_.open && !excluded_.count(lo_.value);
  }

  bool integer_satisfiable() const {
    double lo = std::ceil(lo_.value);
    if (lo_.open && lo == lo_.value) lo += 1;
    double hi = std::floor(hi_.value);
    if (hi_.open && hi == hi_.value) hi -= 1;
    if (lo > hi) return false;
    if (std::isinf(lo) || std::isinf(hi)) return true;
    std::size_t excluded_inside = 0;
    for (double e : excluded_) {
      if (e >= lo && e <= hi && std::floor(e) == e) ++excluded_inside;
    }
    return hi - lo + 1 > static_cast<double>(excluded_inside);
  }

  Bound lo_;
  Bound hi_;
  bool ordinal_;
  std::set<double> excluded_;
};

bool conjunction_satisfiable(const Conjunction& conj, const DataSpecification& spec, const ResolvedConcept& c) {
  std::map<std::string, Feasibility> vars;
  for (const auto* cmp : conj) {
    std::string var;
    Feasibility init(0.0, inf, false);
    if (const auto* key = std::get_if<DimensionKey>(&cmp->lhs)) {
      var = key->str();
      const model::Interval* interval = c.region.find(*key);
      if (spec.target_kind == TargetKind::Concept && interval) {
        init = Feasibility(interval->lo, interval->hi, c.is_ordinal(*key));
      } else {
        init = Feasibility(-inf, inf, c.is_ordinal(*key));
      }
    } else {
      var = "Similarity(" + std::get<SimilarityRef>(cmp->lhs).measure + ")";
    }
    auto it = vars.try_emplace(var, init).first;
    it->second.apply(cmp->op, cmp->rhs);
  }
  for (const auto& [name, f] : vars) {
    if (!f.satisfiable()) return false;
  }
  return true;
}

}  // namespace

bool condition_satisfiable(const ResolvedModel& model, const DataSpecification& spec) {
  if (!spec.condition) return true;
  const ResolvedConcept* c = model.concept_for(spec);
  if (!c) return true;
  const auto dnf = to_dnf(*spec.condition);
  if (!dnf) return true;
  for (const auto& conj : *dnf) {
    if (conjunction_satisfiable(conj, spec, *c)) return true;
  }
  return false;
}

std::vector<Diagnostic> lint_prototypes(const ResolvedModel& model) {
  std::vector<Diagnostic> out;
  for (const auto& [name, proto] : model.prototypes) {
    const auto cit = model.concepts.find(proto.concept_name);
    if (cit == model.concepts.end()) continue;
    const ResolvedConcept& c = cit->second;
    for (const auto& [key, q] : proto.point.coords()) {
      const model::Interval* interval = c.region.find(key);
      if (!interval || interval->contains(q.value)) continue;
      const auto span_it = proto.value_spans.find(key);
      out.push_back(make_warning(
          codes::PrototypeOutsideRegion,
          "prototype '" + name + "' has " + key.str() + " = " + format_value(q.value, q.unit.kind) +
              ", outside the region of concept '" + c.qualified_name() + "' [" +
              format_value(interval->lo, q.unit.kind) + ", " + format_value(interval->hi, q.unit.kind) + "]",
          span_it != proto.value_spans.end() ? span_it->second : proto.span));
    }
  }
  for (const auto& [name, spec] : model.specifications) {
    if (condition_satisfiable(model, spec)) continue;
    const std::string over = spec.target_kind == TargetKind::Concept ? "the region of concept '" + spec.target + "'"
                                                                     : "prototype '" + spec.target + "'";
    out.push_back(make_warning(codes::UnsatisfiableCondition,
                               "where-clause of specification '" + name + "' can never hold over " + over + ": " +
                                   describe(*spec.condition),
                               spec.condition->span));
  }
  sort_diagnostics(out);
  return out;
}

}  // namespace rpsl::analysis
