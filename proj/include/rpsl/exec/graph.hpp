#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rpsl/analyzer/resolved_model.hpp"

namespace rpsl::exec {

/// Edge (u, v) means "u before v".
struct DependencyGraph {
  std::set<std::string> nodes;
  std::set<std::pair<std::string, std::string>> edges;

  void add_node(const std::string& n) { nodes.insert(n); }
  void add_edge(const std::string& from, const std::string& to);
};

/// Plan for `name`: the edges of a DependencyGraph specification, or a
/// single node for a Data specification. Throws std::invalid_argument for
/// unknown names.
DependencyGraph plan_for(const analysis::ResolvedModel& model, const std::string& name);

struct GraphOk {};
struct CycleError {
  std::vector<std::string> path;  // first == last
};
struct UnknownSpec {
  std::string name;
};
using GraphValidation = std::variant<GraphOk, CycleError, UnknownSpec>;

/// Every node must name a Data specification of `model` (checked first, in
/// name order) and the graph must be acyclic.
GraphValidation validate_dependency_graph(const DependencyGraph& g, const analysis::ResolvedModel& model);

/// One witness cycle, found by depth-first search in name order.
std::optional<std::vector<std::string>> find_cycle(const DependencyGraph& g);

class GraphCycleError : public std::runtime_error {
 public:
  explicit GraphCycleError(std::vector<std::string> path);
  std::vector<std::string> path;
};

/// Order in which every name comes as early as its predecessors allow,
/// deciding for smaller names first: `a` gets the earliest slot it can, then
/// `b`, and so on.
/// Throws GraphCycleError on a cyclic graph.
std::vector<std::string> topological_order(const DependencyGraph& g);

std::string describe(const GraphValidation& v);

}  // namespace rpsl::exec
