#pragma once

#include <vector>

#include "rpsl/analyzer/resolved_model.hpp"
#include "rpsl/model/domain.hpp"
#include "rpsl/syntax/ast.hpp"

namespace rpsl::analysis {

struct AnalysisResult {
  ResolvedModel model;
  std::vector<Diagnostic> diagnostics;  // sorted by (file, offset)
};

/// Resolves every name in `ast` against its own declarations and `registry`,
/// checks units and coverage, and runs lint_prototypes on the result.
///
/// The model is returned even when errors are reported; it then holds only
/// the entities that resolved cleanly. Entities that depend on a broken
/// declaration are dropped without a second diagnostic.
AnalysisResult resolve_and_check(const ast::Ast& ast,
                                 const model::DomainRegistry& registry = model::builtin_registry());

/// W001: prototype coordinate outside its concept's region.
/// W002: where-clause unsatisfiable over the target's region by interval
/// reasoning (prototype targets are unconstrained per dimension; similarity
/// values range over [0, inf)).
std::vector<Diagnostic> lint_prototypes(const ResolvedModel& model);

/// Interval satisfiability of `cond` for a specification's target.
bool condition_satisfiable(const ResolvedModel& model, const DataSpecification& spec);

}  // namespace rpsl::analysis
