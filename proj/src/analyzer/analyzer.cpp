#include "rpsl/analyzer/analyzer.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "rpsl/syntax/printer.hpp"

namespace rpsl::analysis {

// ------------------------------------------------------------ ResolvedModel

std::vector<model::DistanceAxis> ResolvedConcept::axes() const {
  std::vector<model::DistanceAxis> out;
  for (const auto& d : domains) {
    for (const auto& dim : d.dimensions) {
      model::DimensionKey key{d.name, dim.name};
      const model::Interval* interval = region.find(key);
      out.push_back(model::DistanceAxis{key, interval ? *interval : model::Interval{}, dim.canonical_range});
    }
  }
  return out;
}

bool ResolvedConcept::is_ordinal(const model::DimensionKey& key) const {
  for (const auto& d : domains) {
    if (d.name != key.domain) continue;
    const auto* dim = d.find(key.dimension);
    return dim && dim->scale == model::Scale::OrdinalInteger;
  }
  return false;
}

const ResolvedPrototype* ResolvedModel::prototype_for(const DataSpecification& spec) const {
  if (spec.target_kind != TargetKind::Prototype) return nullptr;
  const auto it = prototypes.find(spec.target);
  return it == prototypes.end() ? nullptr : &it->second;
}

const ResolvedConcept* ResolvedModel::concept_for(const DataSpecification& spec) const {
  std::string name = spec.target;
  if (spec.target_kind == TargetKind::Prototype) {
    const auto* p = prototype_for(spec);
    if (!p) return nullptr;
    name = p->concept_name;
  }
  const auto it = concepts.find(name);
  return it == concepts.end() ? nullptr : &it->second;
}

std::string describe(const ResolvedComparison& cmp) {
  std::string lhs;
  if (const auto* key = std::get_if<model::DimensionKey>(&cmp.lhs)) {
    lhs = key->str();
  } else {
    lhs = "Similarity(" + std::get<SimilarityRef>(cmp.lhs).measure + ")";
  }
  std::string rhs = syntax::format_number(cmp.rhs);
  if (cmp.rhs_kind != model::UnitKind::Dimensionless) rhs += model::base_unit(cmp.rhs_kind).symbol;
  return lhs + " " + std::string(ast::to_string(cmp.op)) + " " + rhs;
}

std::string describe(const ResolvedCondition& cond) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ResolvedComparison>) {
          return describe(n);
        } else if constexpr (std::is_same_v<T, ResolvedAnd>) {
          return "(" + describe(*n.left) + " and " + describe(*n.right) + ")";
        } else {
          return "(" + describe(*n.left) + " or " + describe(*n.right) + ")";
        }
      },
      cond.node);
}

// ----------------------------------------------------------------- analyzer

namespace {

using model::DimensionKey;
using model::QualityDimension;

class Analyzer {
 public:
  Analyzer(const ast::Ast& ast, const model::DomainRegistry& registry) : ast_(ast) { model_.registry = registry; }

  AnalysisResult run() {
    declare_domains();
    collect_namespaces();
    process_uses();
    resolve_concepts();
    resolve_prototypes();
    resolve_specifications();
    auto lints = lint_prototypes(model_);
    diags_.insert(diags_.end(), lints.begin(), lints.end());
    sort_diagnostics(diags_);
    return AnalysisResult{std::move(model_), std::move(diags_)};
  }

 private:
  void error(std::string_view code, std::string message, const Span& span) {
    diags_.push_back(make_error(code, std::move(message), span));
  }

  // ------------------------------------------------------------- domains

  void declare_domains() {
    for (const auto& d : ast_.domains) {
      model::Domain domain;
      domain.name = d.name.text;
      bool ok = true;
      std::set<std::string> seen;
      for (const auto& dim : d.dimensions) {
        if (!seen.insert(dim.name.text).second) {
          error(codes::DuplicateName, "dimension '" + dim.name.text + "' declared twice in domain '" + d.name.text + "'",
                dim.name.span);
          ok = false;
          continue;
        }
        QualityDimension q;
        q.name = dim.name.text;
        q.scale = dim.scale == ast::Scale::Ordinal ? model::Scale::OrdinalInteger : model::Scale::Continuous;
        if (dim.unit) {
          const auto unit = model::unit_from_symbol(dim.unit->text);
          q.unit_kind = unit->kind;
          q.declared_unit = *unit;
        }
        domain.dimensions.push_back(std::move(q));
      }
      if (model_.registry.find(domain.name)) {
        error(codes::DuplicateName, "domain '" + domain.name + "' is already defined", d.name.span);
        continue;
      }
      if (ok) model_.registry.add(std::move(domain));
    }
  }

  // ----------------------------------------------------------- namespaces

  void collect_namespaces() {
    for (const auto& ns : ast_.namespaces) {
      auto& concepts = namespaces_[ns.name.text];  // namespaces may be reopened
      for (const auto& c : ns.concepts) {
        if (!concepts.emplace(c.name.text, &c).second) {
          error(codes::DuplicateName, "concept '" + ns.name.text + "." + c.name.text + "' is already defined",
                c.name.span);
        }
      }
    }
  }

  void process_uses() {
    for (const auto& u : ast_.uses) {
      if (!namespaces_.count(u.ns.text)) {
        error(codes::UnknownNamespace, "unknown namespace '" + u.ns.text + "'", u.ns.span);
        continue;
      }
      imported_.insert(u.ns.text);
    }
  }

  enum class Lookup { Found, NotFound, Ambiguous, UnknownNamespace };
  struct ConceptLookup {
    Lookup status = Lookup::NotFound;
    std::string qualified;
  };

  ConceptLookup find_concept(const ast::QualifiedName& q) const {
    if (q.parts.size() == 1) {
      ConceptLookup out;
      int hits = 0;
      for (const auto& ns : imported_) {
        const auto& concepts = namespaces_.at(ns);
        if (concepts.count(q.parts[0])) {
          ++hits;
          out.qualified = ns + "." + q.parts[0];
        }
      }
      out.status = hits == 0 ? Lookup::NotFound : hits == 1 ? Lookup::Found : Lookup::Ambiguous;
      return out;
    }
    if (q.parts.size() == 2) {
      const auto it = namespaces_.find(q.parts[0]);
      if (it == namespaces_.end()) return {Lookup::UnknownNamespace, {}};
      if (!it->second.count(q.parts[1])) return {Lookup::NotFound, {}};
      return {Lookup::Found, q.joined()};
    }
    return {Lookup::NotFound, {}};
  }

  // Reports and returns nullopt unless `q` names exactly one concept.
  std::optional<std::string> resolve_concept_ref(const ast::QualifiedName& q) {
    const auto r = find_concept(q);
    switch (r.status) {
      case Lookup::Found:
        return r.qualified;
      case Lookup::NotFound:
        error(codes::UnknownConcept, "unknown concept '" + q.joined() + "'", q.span);
        break;
      case Lookup::Ambiguous:
        error(codes::DuplicateName, "concept name '" + q.joined() + "' is ambiguous across used namespaces", q.span);
        break;
      case Lookup::UnknownNamespace:
        error(codes::UnknownNamespace, "unknown namespace '" + q.parts[0] + "'", q.span);
        break;
    }
    return std::nullopt;
  }

  // ------------------------------------------------------------ dimensions

  struct ResolvedDim {
    DimensionKey key;
    const QualityDimension* dim;
  };

  // Resolves `[prefix.]Domain.Dimension` (or a bare `Dimension` when
  // `allow_bare`) against the domains a concept uses.
  std::optional<ResolvedDim> resolve_path(const ast::QualifiedName& path, const std::vector<model::Domain>& used,
                                          const std::vector<std::string>& prefixes, bool allow_bare) {
    std::vector<std::string> parts = path.parts;
    if (parts.size() == 3) {
      if (std::find(prefixes.begin(), prefixes.end(), parts[0]) == prefixes.end()) {
        error(codes::UnknownDimension,
              "'" + parts[0] + "' in '" + path.joined() + "' does not name " + prefixes.front(), path.span);
        return std::nullopt;
      }
      parts.erase(parts.begin());
    }
    if (parts.size() == 1) {
      if (!allow_bare) {
        error(codes::UnknownDimension, "dimension path '" + path.joined() + "' needs a domain", path.span);
        return std::nullopt;
      }
      std::optional<ResolvedDim> hit;
      int hits = 0;
      for (const auto& d : used) {
        if (const auto* dim = d.find(parts[0])) {
          ++hits;
          hit = ResolvedDim{DimensionKey{d.name, dim->name}, dim};
        }
      }
      if (hits != 1) {
        error(codes::UnknownDimension,
              hits == 0 ? "unknown dimension '" + parts[0] + "'"
                        : "dimension '" + parts[0] + "' is ambiguous; qualify it with its domain",
              path.span);
        return std::nullopt;
      }
      return hit;
    }
    if (parts.size() != 2) {
      error(codes::UnknownDimension, "malformed dimension path '" + path.joined() + "'", path.span);
      return std::nullopt;
    }
    for (const auto& d : used) {
      if (d.name != parts[0]) continue;
      if (const auto* dim = d.find(parts[1])) return ResolvedDim{DimensionKey{d.name, dim->name}, dim};
      error(codes::UnknownDimension, "domain '" + d.name + "' has no dimension '" + parts[1] + "'", path.span);
      return std::nullopt;
    }
    if (!model_.registry.find(parts[0])) {
      error(codes::UnknownDomain, "unknown domain '" + parts[0] + "'", path.span);
    } else {
      error(codes::UnknownDimension, "domain '" + parts[0] + "' is not used by concept " + prefixes.front(),
            path.span);
    }
    return std::nullopt;
  }

  std::optional<model::Quantity> resolve_value(const ast::NumberLiteral& lit, const ResolvedDim& rd) {
    model::Unit unit = rd.dim->default_unit();
    if (lit.unit) unit = *model::unit_from_symbol(*lit.unit);
    if (unit.kind != rd.dim->unit_kind) {
      error(codes::UnitKindMismatch,
            rd.key.str() + " is " + std::string(model::to_string(rd.dim->unit_kind)) + " but " +
                syntax::print(lit) + " is " + std::string(model::to_string(unit.kind)),
            lit.span);
      return std::nullopt;
    }
    return model::Quantity{lit.value, unit};
  }

  bool check_ordinal(const model::Quantity& q, const ResolvedDim& rd, const Span& span) {
    if (rd.dim->scale != model::Scale::OrdinalInteger) return true;
    const double v = model::to_base(q);
    if (std::floor(v) == v) return true;
    error(codes::NonIntegerOrdinal, rd.key.str() + " is ordinal and needs an integer value", span);
    return false;
  }

  // -------------------------------------------------------------- concepts

  void resolve_concepts() {
    for (const auto& [ns_name, concepts] : namespaces_) {
      for (const auto& [name, decl] : concepts) {
        if (auto c = resolve_concept(ns_name, *decl)) model_.concepts.emplace(c->qualified_name(), std::move(*c));
      }
    }
  }

  std::optional<ResolvedConcept> resolve_concept(const std::string& ns, const ast::ConceptDecl& decl) {
    ResolvedConcept c;
    c.ns = ns;
    c.name = decl.name.text;
    c.span = decl.name.span;
    bool ok = true;
    for (const auto& d : decl.used_domains) {
      const model::Domain* domain = d.parts.size() == 1 ? model_.registry.find(d.parts[0]) : nullptr;
      if (!domain) {
        error(codes::UnknownDomain, "unknown domain '" + d.joined() + "'", d.span);
        ok = false;
        continue;
      }
      const bool dup = std::any_of(c.domains.begin(), c.domains.end(),
                                   [&](const model::Domain& x) { return x.name == domain->name; });
      if (dup) {
        error(codes::DuplicateName, "domain '" + domain->name + "' is used twice", d.span);
        continue;
      }
      c.domains.push_back(*domain);
    }
    if (!ok) return std::nullopt;

    std::vector<model::RegionPoint> points;
    for (const auto& p : decl.polytope.points) {
      const auto rd = resolve_path(p.dimension, c.domains, {c.name}, false);
      if (!rd) {
        ok = false;
        continue;
      }
      const auto q = resolve_value(p.value, *rd);
      if (!q || !check_ordinal(*q, *rd, p.value.span)) {
        ok = false;
        continue;
      }
      points.push_back(model::RegionPoint{rd->key, *q});
    }
    if (!ok) return std::nullopt;

    std::set<DimensionKey> covered;
    for (const auto& p : points) covered.insert(p.dimension);
    std::vector<std::string> missing;
    for (const auto& d : c.domains) {
      for (const auto& dim : d.dimensions) {
        if (!covered.count(DimensionKey{d.name, dim.name})) missing.push_back(d.name + "." + dim.name);
      }
    }
    if (!missing.empty()) {
      std::string list;
      for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
      error(codes::MissingDimension, "concept '" + c.name + "' has no Point for: " + list, decl.name.span);
      return std::nullopt;
    }
    c.region = model::build_region(c.domains, points);
    return c;
  }

  // ------------------------------------------------------------ prototypes

  void resolve_prototypes() {
    for (const auto& p : ast_.prototypes) {
      if (!prototype_decls_.emplace(p.name.text, &p).second) {
        error(codes::DuplicateName, "prototype '" + p.name.text + "' is already defined", p.name.span);
        continue;
      }
      const auto concept_name = resolve_concept_ref(p.concept_ref);
      if (!concept_name) continue;
      const auto it = model_.concepts.find(*concept_name);
      if (it == model_.concepts.end()) continue;  // concept itself is broken
      if (auto proto = resolve_prototype(p, it->second)) model_.prototypes.emplace(proto->name, std::move(*proto));
    }
  }

  std::optional<ResolvedPrototype> resolve_prototype(const ast::PrototypeDecl& decl, const ResolvedConcept& c) {
    ResolvedPrototype p;
    p.name = decl.name.text;
    p.concept_name = c.qualified_name();
    p.span = decl.name.span;
    bool ok = true;
    for (const auto& v : decl.values) {
      const auto rd = resolve_path(v.dimension, c.domains, {c.name, p.name}, false);
      if (!rd) {
        ok = false;
        continue;
      }
      const auto q = resolve_value(v.value, *rd);
      if (!q || !check_ordinal(*q, *rd, v.value.span)) {
        ok = false;
        continue;
      }
      if (p.point.has(rd->key)) {
        error(codes::DuplicateName, "prototype '" + p.name + "' sets " + rd->key.str() + " twice", v.dimension.span);
        ok = false;
        continue;
      }
      p.point.set(rd->key, *q);
      p.value_spans[rd->key] = v.span;
    }
    if (!ok) return std::nullopt;
    std::string missing;
    for (const auto& axis : c.axes()) {
      if (!p.point.has(axis.key)) missing += (missing.empty() ? "" : ", ") + axis.key.str();
    }
    if (!missing.empty()) {
      error(codes::MissingDimension, "prototype '" + p.name + "' has no value for: " + missing, decl.name.span);
      return std::nullopt;
    }
    return p;
  }

  // -------------------------------------------------------- specifications

  void resolve_specifications() {
    for (const auto& s : ast_.specifications) {
      if (!spec_decls_.emplace(s.name.text, &s).second) {
        error(codes::DuplicateName, "specification '" + s.name.text + "' is already defined", s.name.span);
        continue;
      }
      if (const auto* data = std::get_if<ast::DataBlock>(&s.body)) {
        if (auto spec = resolve_data(s, *data)) model_.specifications.emplace(spec->name, std::move(*spec));
      }
    }
    // Graph endpoints need every data specification to be known first.
    for (const auto& [name, decl] : spec_decls_) {
      if (const auto* graph = std::get_if<ast::DependencyGraphDecl>(&decl->body)) resolve_graph(*decl, *graph);
    }
  }

  std::optional<DataSpecification> resolve_data(const ast::SpecificationDecl& decl, const ast::DataBlock& data) {
    DataSpecification spec;
    spec.name = decl.name.text;
    spec.selector = data.selector;
    spec.span = decl.name.span;

    const bool names_prototype = data.target.parts.size() == 1 && prototype_decls_.count(data.target.parts[0]);
    if (names_prototype) {
      if (find_concept(data.target).status == Lookup::Found) {
        error(codes::DuplicateName,
              "'" + data.target.joined() + "' names both a prototype and a concept; qualify the concept",
              data.target.span);
        return std::nullopt;
      }
      spec.target_kind = TargetKind::Prototype;
      spec.target = data.target.parts[0];
      if (!model_.prototypes.count(spec.target)) return std::nullopt;
    } else {
      const auto r = find_concept(data.target);
      if (r.status == Lookup::NotFound && data.target.parts.size() == 1) {
        error(codes::UnknownConcept, "unknown concept or prototype '" + data.target.joined() + "'", data.target.span);
        return std::nullopt;
      }
      const auto name = resolve_concept_ref(data.target);
      if (!name) return std::nullopt;
      spec.target_kind = TargetKind::Concept;
      spec.target = *name;
      if (!model_.concepts.count(spec.target)) return std::nullopt;
    }

    bool ok = true;
    if (data.deadline) {
      const auto& lit = data.deadline->value;
      const auto unit = model::unit_from_symbol(lit.unit.value_or("none"));
      if (!unit || unit->kind != model::UnitKind::Time) {
        error(codes::UnitKindMismatch, "Deadline needs a time unit, got " + syntax::print(lit), lit.span);
        ok = false;
      } else {
        spec.deadline_ms = model::to_base(model::Quantity{lit.value, *unit});
      }
    }

    if (data.condition) {
      const ResolvedConcept* c = model_.concept_for(spec);
      Context ctx{spec, *c};
      spec.condition = resolve_condition(*data.condition, ctx);
      if (!spec.condition) ok = false;
    }
    if (!ok) return std::nullopt;
    return spec;
  }

  struct Context {
    const DataSpecification& spec;
    const ResolvedConcept& concept_;
  };

  ResolvedConditionPtr resolve_condition(const ast::ConditionExpr& cond, const Context& ctx) {
    if (const auto* paren = std::get_if<ast::ParenExpr>(&cond.node)) return resolve_condition(*paren->inner, ctx);
    if (const auto* a = std::get_if<ast::AndExpr>(&cond.node)) {
      auto l = resolve_condition(*a->left, ctx);
      auto r = resolve_condition(*a->right, ctx);
      if (!l || !r) return nullptr;
      return std::make_shared<const ResolvedCondition>(ResolvedCondition{ResolvedAnd{l, r}, cond.span});
    }
    if (const auto* o = std::get_if<ast::OrExpr>(&cond.node)) {
      auto l = resolve_condition(*o->left, ctx);
      auto r = resolve_condition(*o->right, ctx);
      if (!l || !r) return nullptr;
      return std::make_shared<const ResolvedCondition>(ResolvedCondition{ResolvedOr{l, r}, cond.span});
    }
    const auto& cmp = std::get<ast::Comparison>(cond.node);
    ResolvedComparison out;
    out.op = cmp.op;
    out.span = cond.span;
    if (const auto* call = std::get_if<ast::SimilarityCall>(&cmp.lhs)) {
      bool ok = true;
      if (!model::is_known_measure(call->measure.text)) {
        error(codes::UnknownMeasure, "unknown similarity measure '" + call->measure.text + "'", call->measure.span);
        ok = false;
      }
      if (ctx.spec.target_kind == TargetKind::Concept) {
        error(codes::SimilarityOnConcept,
              "Similarity needs a prototype target; '" + ctx.spec.target + "' is a concept", call->span);
        ok = false;
      }
      if (cmp.rhs.unit) {
        error(codes::UnitKindMismatch, "similarity values are dimensionless, got " + syntax::print(cmp.rhs),
              cmp.rhs.span);
        ok = false;
      }
      if (!ok) return nullptr;
      out.lhs = SimilarityRef{call->measure.text};
      out.rhs = cmp.rhs.value;
    } else {
      const auto& path = std::get<ast::QualifiedName>(cmp.lhs);
      std::vector<std::string> prefixes{ctx.concept_.name};
      if (ctx.spec.target_kind == TargetKind::Prototype) prefixes.push_back(ctx.spec.target);
      const auto rd = resolve_path(path, ctx.concept_.domains, prefixes, true);
      if (!rd) return nullptr;
      const auto q = resolve_value(cmp.rhs, *rd);
      if (!q) return nullptr;
      out.lhs = rd->key;
      out.rhs = model::to_base(*q);
      out.rhs_kind = rd->dim->unit_kind;
    }
    return std::make_shared<const ResolvedCondition>(ResolvedCondition{std::move(out), cond.span});
  }

  void resolve_graph(const ast::SpecificationDecl& decl, const ast::DependencyGraphDecl& graph) {
    DependencyGraphSpecification g;
    g.name = decl.name.text;
    g.span = decl.name.span;
    bool ok = true;
    for (const auto& e : graph.edges) {
      for (const auto* end : {&e.from, &e.to}) {
        const auto it = spec_decls_.find(end->text);
        if (it == spec_decls_.end()) {
          error(codes::UnknownSpecification, "unknown specification '" + end->text + "'", end->span);
          ok = false;
        } else if (!std::holds_alternative<ast::DataBlock>(it->second->body)) {
          error(codes::UnknownSpecification, "'" + end->text + "' is a DependencyGraph, not a Data specification",
                end->span);
          ok = false;
        } else if (!model_.specifications.count(end->text)) {
          ok = false;  // already reported on the specification itself
        }
      }
      g.edges.emplace_back(e.from.text, e.to.text);
    }
    if (ok) model_.dependency_graphs.emplace(g.name, std::move(g));
  }

  const ast::Ast& ast_;
  ResolvedModel model_;
  std::vector<Diagnostic> diags_;
  std::map<std::string, std::map<std::string, const ast::ConceptDecl*>> namespaces_;
  std::set<std::string> imported_;
  std::map<std::string, const ast::PrototypeDecl*> prototype_decls_;
  std::map<std::string, const ast::SpecificationDecl*> spec_decls_;
};

}  // namespace

AnalysisResult resolve_and_check(const ast::Ast& ast, const model::DomainRegistry& registry) {
  return Analyzer(ast, registry).run();
}

}  // namespace rpsl::analysis
