#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rpsl/diagnostic.hpp"
#include "rpsl/model/domain.hpp"
#include "rpsl/model/region.hpp"
#include "rpsl/model/similarity.hpp"
#include "rpsl/syntax/ast.hpp"

namespace rpsl::analysis {

using ast::RelOp;
using ast::Selector;

struct ResolvedConcept {
  std::string ns;
  std::string name;
  std::vector<model::Domain> domains;  // in `use_domain` order
  model::ConceptRegion region;
  Span span;

  std::string qualified_name() const { return ns + "." + name; }

  /// One axis per dimension of every used domain, in declaration order,
  /// carrying the region interval and the dimension's canonical range.
  std::vector<model::DistanceAxis> axes() const;
  bool is_ordinal(const model::DimensionKey& key) const;
};

struct ResolvedPrototype {
  std::string name;
  std::string concept_name;  // qualified
  model::Knoxel point;
  std::map<model::DimensionKey, Span> value_spans;
  Span span;
};

enum class TargetKind { Concept, Prototype };

struct SimilarityRef {
  std::string measure;
};

struct ResolvedComparison {
  std::variant<model::DimensionKey, SimilarityRef> lhs;
  RelOp op = RelOp::Eq;
  double rhs = 0.0;  // base units
  model::UnitKind rhs_kind = model::UnitKind::Dimensionless;
  Span span;
};

struct ResolvedCondition;
using ResolvedConditionPtr = std::shared_ptr<const ResolvedCondition>;

struct ResolvedAnd {
  ResolvedConditionPtr left, right;
};
struct ResolvedOr {
  ResolvedConditionPtr left, right;
};

struct ResolvedCondition {
  std::variant<ResolvedComparison, ResolvedAnd, ResolvedOr> node;
  Span span;
};

struct DataSpecification {
  std::string name;
  Selector selector = Selector::Amount;
  TargetKind target_kind = TargetKind::Concept;
  std::string target;                  // qualified concept name or prototype name
  ResolvedConditionPtr condition;      // null: match all candidates
  std::optional<double> deadline_ms;
  Span span;
};

struct DependencyGraphSpecification {
  std::string name;
  std::vector<std::pair<std::string, std::string>> edges;  // (before, after)
  Span span;
};

/// Fully resolved program. Every name inside refers to an entry of this
/// model or of `registry`.
struct ResolvedModel {
  model::DomainRegistry registry;
  std::map<std::string, ResolvedConcept> concepts;  // key: ns.name
  std::map<std::string, ResolvedPrototype> prototypes;
  std::map<std::string, DataSpecification> specifications;
  std::map<std::string, DependencyGraphSpecification> dependency_graphs;

  /// Concept whose dimensions a specification ranges over (for prototype
  /// targets, the prototype's concept).
  const ResolvedConcept* concept_for(const DataSpecification& spec) const;
  const ResolvedPrototype* prototype_for(const DataSpecification& spec) const;
};

/// Pretty form of a resolved condition, for notes and reports.
std::string describe(const ResolvedCondition& cond);
std::string describe(const ResolvedComparison& cmp);

}  // namespace rpsl::analysis
