#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "rpsl/analyzer/resolved_model.hpp"
#include "rpsl/exec/clock.hpp"
#include "rpsl/exec/graph.hpp"
#include "rpsl/exec/provider.hpp"
#include "rpsl/query/evaluator.hpp"

namespace rpsl::exec {

struct Completed {
  query::QueryResult result;
};
struct DeadlineMissed {
  double deadline_ms = 0;
  std::int64_t elapsed_ms = 0;
};
/// Not issued because a predecessor did not complete.
struct Skipped {
  std::string blocked_by;
};
/// The provider or the evaluation raised an error.
struct Failed {
  std::string reason;
};
using Verdict = std::variant<Completed, DeadlineMissed, Skipped, Failed>;

std::string_view verdict_name(const Verdict& v);

struct ReportEntry {
  std::string spec;
  std::optional<std::int64_t> request_stamp_ms;   // absent when skipped
  std::optional<std::int64_t> response_stamp_ms;  // absent when skipped or failed before answering
  std::optional<double> deadline_ms;
  Verdict verdict;

  std::optional<std::int64_t> elapsed_ms() const;
};

struct ExecutionReport {
  std::string plan;
  std::vector<ReportEntry> entries;  // in issue order

  bool all_completed() const;
  const ReportEntry* find(const std::string& spec) const;
};

class PlanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Issues every specification of `graph` in topological_order. Each request
/// is stamped with clock.now(); the provider's scene is evaluated and the
/// elapsed time (response - request) checked against the specification's
/// deadline, inclusively. A spec that does not complete causes all its
/// transitive successors to be Skipped. Throws PlanError if the graph does
/// not validate against `model`.
ExecutionReport execute_plan(const DependencyGraph& graph, SceneProvider& provider, Clock& clock,
                             const analysis::ResolvedModel& model, std::string plan_name = {});

nlohmann::json to_json(const ExecutionReport& report);

}  // namespace rpsl::exec
