#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "rpsl/analyzer/resolved_model.hpp"
#include "rpsl/query/scene.hpp"

namespace rpsl::query {

struct PoseEntry {
  std::string id;
  Pose pose;

  friend bool operator==(const PoseEntry&, const PoseEntry&) = default;
};

/// Outcome of one Data specification over one scene.
///
/// `matched_ids` is sorted. For Amount the count is matched_ids.size(); for
/// Pose, `poses` lists the matches that carry a pose, in id order.
struct QueryResult {
  std::string spec;
  analysis::Selector kind = analysis::Selector::Amount;
  std::vector<std::string> matched_ids;
  std::vector<PoseEntry> poses;
  std::vector<std::string> notes;

  std::size_t count() const { return matched_ids.size(); }
};

/// What a condition is evaluated against: the concept whose dimensions the
/// specification ranges over and, for prototype targets, the reference point.
struct EvalContext {
  const analysis::DataSpecification* spec = nullptr;
  const analysis::ResolvedConcept* concept_ = nullptr;
  const analysis::ResolvedPrototype* prototype = nullptr;
  std::vector<model::DistanceAxis> axes;
};

EvalContext make_context(const analysis::ResolvedModel& model, const analysis::DataSpecification& spec);

/// Normalized Euclidean distance between `inst` and the context's prototype
/// over the prototype concept's dimensions.
double similarity(const EvalContext& ctx, const InstanceRecord& inst);

/// Evaluates `cond` on one instance. Comparisons on a dimension the instance
/// lacks are false and append a note to `notes` (when non-null). `and`/`or`
/// short-circuit left to right.
bool evaluate_condition(const analysis::ResolvedCondition& cond, const InstanceRecord& inst, const EvalContext& ctx,
                        std::vector<std::string>* notes = nullptr);

class QueryError : public std::runtime_error {
 public:
  enum class Kind { UnknownSpecification, TargetNotData };
  QueryError(Kind kind, const std::string& what);
  Kind kind;
};

QueryResult evaluate_specification(const analysis::DataSpecification& spec, const Scene& scene,
                                   const analysis::ResolvedModel& model);

/// Looks `name` up first. Throws QueryError::TargetNotData for a
/// DependencyGraph specification.
QueryResult evaluate_specification(std::string_view name, const Scene& scene, const analysis::ResolvedModel& model);

/// Result document: {"spec","kind","count"?,"poses"?,"matched_ids","notes"}.
nlohmann::json to_json(const QueryResult& result);
nlohmann::json to_json(const Pose& pose);

}  // namespace rpsl::query
