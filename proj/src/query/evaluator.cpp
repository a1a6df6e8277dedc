#include "rpsl/query/evaluator.hpp"

#include <algorithm>
#include <cmath>

namespace rpsl::query {

using analysis::ResolvedComparison;
using analysis::TargetKind;

QueryError::QueryError(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}

EvalContext make_context(const analysis::ResolvedModel& model, const analysis::DataSpecification& spec) {
  EvalContext ctx;
  ctx.spec = &spec;
  ctx.concept_ = model.concept_for(spec);
  ctx.prototype = model.prototype_for(spec);
  if (ctx.concept_) ctx.axes = ctx.concept_->axes();
  return ctx;
}

double similarity(const EvalContext& ctx, const InstanceRecord& inst) {
  return model::euclidean_distance(inst.knoxel, ctx.prototype->point, ctx.axes, /*normalized=*/true);
}

namespace {

bool compare(double lhs, ast::RelOp op, double rhs) {
  switch (op) {
    case ast::RelOp::Eq: return lhs == rhs;
    case ast::RelOp::Ne: return lhs != rhs;
    case ast::RelOp::Lt: return lhs < rhs;
    case ast::RelOp::Le: return lhs <= rhs;
    case ast::RelOp::Gt: return lhs > rhs;
    case ast::RelOp::Ge: return lhs >= rhs;
  }
  return false;
}

bool compare_similarity(double d, ast::RelOp op, double rhs) {
  const bool close = std::abs(d - rhs) <= model::similarity_epsilon;
  if (op == ast::RelOp::Eq) return close;
  if (op == ast::RelOp::Ne) return !close;
  return compare(d, op, rhs);
}

bool evaluate_comparison(const ResolvedComparison& cmp, const InstanceRecord& inst, const EvalContext& ctx,
                         std::vector<std::string>* notes) {
  if (const auto* key = std::get_if<model::DimensionKey>(&cmp.lhs)) {
    const auto v = inst.knoxel.get(*key);
    if (!v) {
      if (notes) {
        notes->push_back("instance '" + inst.id + "' has no value for " + key->str() + "; '" +
                         analysis::describe(cmp) + "' is false");
      }
      return false;
    }
    return compare(*v, cmp.op, cmp.rhs);
  }
  if (!ctx.prototype) return false;
  for (const auto& axis : ctx.axes) {
    if (!inst.knoxel.has(axis.key)) {
      if (notes) {
        notes->push_back("instance '" + inst.id + "' has no value for " + axis.key.str() + "; '" +
                         analysis::describe(cmp) + "' is false");
      }
      return false;
    }
  }
  return compare_similarity(similarity(ctx, inst), cmp.op, cmp.rhs);
}

}  // namespace

bool evaluate_condition(const analysis::ResolvedCondition& cond, const InstanceRecord& inst, const EvalContext& ctx,
                        std::vector<std::string>* notes) {
  if (const auto* cmp = std::get_if<ResolvedComparison>(&cond.node)) return evaluate_comparison(*cmp, inst, ctx, notes);
  if (const auto* a = std::get_if<analysis::ResolvedAnd>(&cond.node)) {
    return evaluate_condition(*a->left, inst, ctx, notes) && evaluate_condition(*a->right, inst, ctx, notes);
  }
  const auto& o = std::get<analysis::ResolvedOr>(cond.node);
  return evaluate_condition(*o.left, inst, ctx, notes) || evaluate_condition(*o.right, inst, ctx, notes);
}

QueryResult evaluate_specification(const analysis::DataSpecification& spec, const Scene& scene,
                                   const analysis::ResolvedModel& model) {
  const EvalContext ctx = make_context(model, spec);
  if (!ctx.concept_ || (spec.target_kind == TargetKind::Prototype && !ctx.prototype)) {
    throw QueryError(QueryError::Kind::UnknownSpecification,
                     "specification '" + spec.name + "' refers to entities missing from the model");
  }
  QueryResult result;
  result.spec = spec.name;
  result.kind = spec.selector;

  // Id order makes results and notes independent of scene order.
  std::vector<const InstanceRecord*> ordered;
  ordered.reserve(scene.instances.size());
  for (const auto& inst : scene.instances) ordered.push_back(&inst);
  std::sort(ordered.begin(), ordered.end(), [](const auto* a, const auto* b) { return a->id < b->id; });

  for (const InstanceRecord* inst : ordered) {
    bool candidate;
    if (spec.target_kind == TargetKind::Concept) {
      candidate = model::contains(ctx.concept_->region, inst->knoxel);
    } else {
      candidate = std::all_of(ctx.axes.begin(), ctx.axes.end(),
                              [&](const model::DistanceAxis& a) { return inst->knoxel.has(a.key); });
    }
    if (!candidate) continue;
    if (spec.condition && !evaluate_condition(*spec.condition, *inst, ctx, &result.notes)) continue;
    result.matched_ids.push_back(inst->id);
    if (spec.selector == analysis::Selector::Pose) {
      if (inst->pose) {
        result.poses.push_back(PoseEntry{inst->id, *inst->pose});
      } else {
        result.notes.push_back("instance '" + inst->id + "' matched but has no pose; omitted from poses");
      }
    }
  }
  return result;
}

QueryResult evaluate_specification(std::string_view name, const Scene& scene, const analysis::ResolvedModel& model) {
  const auto it = model.specifications.find(std::string(name));
  if (it != model.specifications.end()) return evaluate_specification(it->second, scene, model);
  if (model.dependency_graphs.count(std::string(name))) {
    throw QueryError(QueryError::Kind::TargetNotData, std::string(name) + " is a DependencyGraph; use run");
  }
  throw QueryError(QueryError::Kind::UnknownSpecification, "unknown specification '" + std::string(name) + "'");
}

nlohmann::json to_json(const Pose& p) {
  return nlohmann::json{{"x", p.x}, {"y", p.y}, {"z", p.z}, {"qx", p.qx}, {"qy", p.qy}, {"qz", p.qz}, {"qw", p.qw}};
}

nlohmann::json to_json(const QueryResult& r) {
  nlohmann::json j;
  j["spec"] = r.spec;
  j["kind"] = std::string(ast::to_string(r.kind));
  if (r.kind == analysis::Selector::Amount) {
    j["count"] = r.count();
  } else {
    auto poses = nlohmann::json::array();
    for (const auto& p : r.poses) poses.push_back({{"id", p.id}, {"pose", to_json(p.pose)}});
    j["poses"] = std::move(poses);
  }
  j["matched_ids"] = r.matched_ids;
  j["notes"] = r.notes;
  return j;
}

}  // namespace rpsl::query
