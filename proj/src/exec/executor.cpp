#include "rpsl/exec/executor.hpp"

#include <cmath>
#include <map>

namespace rpsl::exec {

std::string_view verdict_name(const Verdict& v) {
  switch (v.index()) {
    case 0: return "Completed";
    case 1: return "DeadlineMissed";
    case 2: return "Skipped";
    default: return "Failed";
  }
}

std::optional<std::int64_t> ReportEntry::elapsed_ms() const {
  if (!request_stamp_ms || !response_stamp_ms) return std::nullopt;
  return *response_stamp_ms - *request_stamp_ms;
}

bool ExecutionReport::all_completed() const {
  for (const auto& e : entries) {
    if (!std::holds_alternative<Completed>(e.verdict)) return false;
  }
  return true;
}

const ReportEntry* ExecutionReport::find(const std::string& spec) const {
  for (const auto& e : entries) {
    if (e.spec == spec) return &e;
  }
  return nullptr;
}

ExecutionReport execute_plan(const DependencyGraph& graph, SceneProvider& provider, Clock& clock,
                             const analysis::ResolvedModel& model, std::string plan_name) {
  const auto validation = validate_dependency_graph(graph, model);
  if (!std::holds_alternative<GraphOk>(validation)) throw PlanError(describe(validation));

  std::map<std::string, std::vector<std::string>> predecessors;
  for (const auto& [from, to] : graph.edges) predecessors[to].push_back(from);

  ExecutionReport report;
  report.plan = std::move(plan_name);
  std::map<std::string, bool> completed;

  for (const auto& name : topological_order(graph)) {
    const auto& spec = model.specifications.at(name);
    ReportEntry entry;
    entry.spec = name;
    entry.deadline_ms = spec.deadline_ms;

    std::optional<std::string> blocker;
    for (const auto& p : predecessors[name]) {  // sorted, so the smallest blocker is named
      if (!completed.at(p)) {
        blocker = p;
        break;
      }
    }
    if (blocker) {
      entry.verdict = Skipped{*blocker};
      completed[name] = false;
      report.entries.push_back(std::move(entry));
      continue;
    }

    const std::int64_t request = clock.now();
    entry.request_stamp_ms = request;
    try {
      ProviderResponse response = provider.respond(name, request);
      entry.response_stamp_ms = response.response_stamp_ms;
      const std::int64_t elapsed = response.response_stamp_ms - request;
      if (spec.deadline_ms && static_cast<double>(elapsed) > *spec.deadline_ms) {
        entry.verdict = DeadlineMissed{*spec.deadline_ms, elapsed};
      } else {
        entry.verdict = Completed{query::evaluate_specification(spec, response.scene, model)};
      }
    } catch (const std::exception& e) {
      entry.verdict = Failed{e.what()};
    }
    completed[name] = std::holds_alternative<Completed>(entry.verdict);
    report.entries.push_back(std::move(entry));
  }
  return report;
}

namespace {

nlohmann::json ms_value(double ms) {
  if (std::floor(ms) == ms && std::abs(ms) < 9.0e15) return static_cast<std::int64_t>(ms);
  return ms;
}

template <typename T>
nlohmann::json optional_value(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

nlohmann::json to_json(const ExecutionReport& report) {
  nlohmann::json entries = nlohmann::json::array();
  nlohmann::json order = nlohmann::json::array();
  for (const auto& e : report.entries) {
    order.push_back(e.spec);
    nlohmann::json j;
    j["spec"] = e.spec;
    j["verdict"] = std::string(verdict_name(e.verdict));
    j["request_stamp_ms"] = optional_value(e.request_stamp_ms);
    j["response_stamp_ms"] = optional_value(e.response_stamp_ms);
    j["elapsed_ms"] = optional_value(e.elapsed_ms());
    j["deadline_ms"] = e.deadline_ms ? ms_value(*e.deadline_ms) : nlohmann::json(nullptr);
    if (const auto* c = std::get_if<Completed>(&e.verdict)) {
      j["result"] = query::to_json(c->result);
    } else if (const auto* s = std::get_if<Skipped>(&e.verdict)) {
      j["blocked_by"] = s->blocked_by;
    } else if (const auto* f = std::get_if<Failed>(&e.verdict)) {
      j["reason"] = f->reason;
    }
    entries.push_back(std::move(j));
  }
  return nlohmann::json{{"plan", report.plan},
                        {"order", std::move(order)},
                        {"entries", std::move(entries)},
                        {"all_completed", report.all_completed()}};
}

}  // namespace rpsl::exec
