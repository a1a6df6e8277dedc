#include "rpsl/exec/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>

namespace rpsl::exec {

void DependencyGraph::add_edge(const std::string& from, const std::string& to) {
  nodes.insert(from);
  nodes.insert(to);
  edges.emplace(from, to);
}

DependencyGraph plan_for(const analysis::ResolvedModel& model, const std::string& name) {
  DependencyGraph g;
  if (const auto it = model.dependency_graphs.find(name); it != model.dependency_graphs.end()) {
    for (const auto& [from, to] : it->second.edges) g.add_edge(from, to);
    return g;
  }
  if (model.specifications.count(name)) {
    g.add_node(name);
    return g;
  }
  throw std::invalid_argument("unknown specification '" + name + "'");
}

namespace {

std::map<std::string, std::vector<std::string>> successors(const DependencyGraph& g) {
  std::map<std::string, std::vector<std::string>> out;
  for (const auto& n : g.nodes) out[n];
  for (const auto& [from, to] : g.edges) out[from].push_back(to);  // edges are sorted, so lists are too
  return out;
}

}  // namespace

std::optional<std::vector<std::string>> find_cycle(const DependencyGraph& g) {
  const auto succ = successors(g);
  enum class Mark { White, Grey, Black };
  std::map<std::string, Mark> mark;
  std::vector<std::string> stack;
  std::optional<std::vector<std::string>> cycle;

  std::function<bool(const std::string&)> visit = [&](const std::string& u) {
    mark[u] = Mark::Grey;
    stack.push_back(u);
    for (const auto& v : succ.at(u)) {
      if (mark[v] == Mark::Grey) {
        std::vector<std::string> path(std::find(stack.begin(), stack.end(), v), stack.end());
        path.push_back(v);
        cycle = std::move(path);
        return true;
      }
      if (mark[v] == Mark::White && visit(v)) return true;
    }
    stack.pop_back();
    mark[u] = Mark::Black;
    return false;
  };

  for (const auto& [n, _] : succ) {
    if (mark[n] == Mark::White && visit(n)) break;
  }
  return cycle;
}

GraphValidation validate_dependency_graph(const DependencyGraph& g, const analysis::ResolvedModel& model) {
  for (const auto& n : g.nodes) {
    if (!model.specifications.count(n)) return UnknownSpec{n};
  }
  if (auto c = find_cycle(g)) return CycleError{std::move(*c)};
  return GraphOk{};
}

GraphCycleError::GraphCycleError(std::vector<std::string> p)
    : std::runtime_error("dependency cycle"), path(std::move(p)) {}

// Built back to front: the largest name whose successors are all placed goes
// last. The result puts each name as early as its predecessors allow, smaller
// names first.
std::vector<std::string> topological_order(const DependencyGraph& g) {
  std::map<std::string, std::vector<std::string>> pred;
  std::map<std::string, std::size_t> outdegree;
  for (const auto& n : g.nodes) {
    pred[n];
    outdegree[n] = 0;
  }
  for (const auto& [from, to] : g.edges) {
    pred[to].push_back(from);
    ++outdegree[from];
  }

  std::priority_queue<std::string> ready;
  for (const auto& [n, d] : outdegree) {
    if (d == 0) ready.push(n);
  }
  std::vector<std::string> order;
  order.reserve(g.nodes.size());
  while (!ready.empty()) {
    std::string v = ready.top();
    ready.pop();
    for (const auto& u : pred.at(v)) {
      if (--outdegree[u] == 0) ready.push(u);
    }
    order.push_back(std::move(v));
  }
  if (order.size() != g.nodes.size()) throw GraphCycleError(find_cycle(g).value_or(std::vector<std::string>{}));
  std::reverse(order.begin(), order.end());
  return order;
}

std::string describe(const GraphValidation& v) {
  if (std::holds_alternative<GraphOk>(v)) return "ok";
  if (const auto* u = std::get_if<UnknownSpec>(&v)) return "unknown specification '" + u->name + "'";
  std::string out = "dependency cycle: ";
  const auto& path = std::get<CycleError>(v).path;
  for (std::size_t i = 0; i < path.size(); ++i) out += (i ? " -> " : "") + path[i];
  return out;
}

}  // namespace rpsl::exec
