#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "rpsl/analyzer/analyzer.hpp"
#include "rpsl/exec/executor.hpp"
#include "rpsl/query/evaluator.hpp"
#include "rpsl/syntax/parser.hpp"
#include "rpsl/syntax/printer.hpp"

namespace rpsl::cli {
namespace {

using nlohmann::json;

bool color_enabled() {
  const char* v = std::getenv("RPSL_COLOR");
  return v && std::string_view(v) == "1";
}

struct CompilationUnit {
  std::vector<std::string> paths;
  std::vector<std::string> texts;
  ast::Ast ast;
  analysis::AnalysisResult analysis;
  std::vector<Diagnostic> diagnostics;  // parse + analysis, sorted
};

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// All files form one compilation unit; file ids are argument positions.
std::optional<CompilationUnit> load_unit(const std::vector<std::string>& files, std::ostream& err) {
  CompilationUnit unit;
  std::vector<ast::Ast> parsed;
  for (std::size_t i = 0; i < files.size(); ++i) {
    auto text = read_file(files[i]);
    if (!text) {
      err << "error: cannot read " << files[i] << '\n';
      return std::nullopt;
    }
    auto result = syntax::parse_source(*text, static_cast<FileId>(i));
    unit.diagnostics.insert(unit.diagnostics.end(), result.diagnostics.begin(), result.diagnostics.end());
    parsed.push_back(std::move(result.ast));
    unit.paths.push_back(files[i]);
    unit.texts.push_back(std::move(*text));
  }
  unit.ast = ast::merge(std::move(parsed));
  unit.analysis = analysis::resolve_and_check(unit.ast);
  unit.diagnostics.insert(unit.diagnostics.end(), unit.analysis.diagnostics.begin(), unit.analysis.diagnostics.end());
  sort_diagnostics(unit.diagnostics);
  return unit;
}

std::string_view line_at(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  std::size_t start = 0;
  if (offset > 0) {
    const auto nl = text.rfind('\n', offset - 1);
    if (nl != std::string::npos) start = nl + 1;
  }
  const auto end = text.find('\n', start);
  return std::string_view(text).substr(start, (end == std::string::npos ? text.size() : end) - start);
}

void print_text_diagnostic(const CompilationUnit& unit, const Diagnostic& d, std::ostream& os, bool color) {
  const char* tint = d.severity == Severity::Error ? "\x1b[31m" : d.severity == Severity::Warning ? "\x1b[33m" : "\x1b[36m";
  os << unit.paths[d.span.file] << ':' << d.span.line << ':' << d.span.column << ": ";
  if (color) os << "\x1b[1m" << tint;
  os << to_string(d.severity) << '[' << d.code << ']';
  if (color) os << "\x1b[0m";
  os << ": " << d.message << '\n';
  const std::string& text = unit.texts[d.span.file];
  const auto line = line_at(text, d.span.start);
  os << "    " << line << '\n';
  os << "    ";
  for (std::uint32_t i = 1; i < d.span.column && i - 1 < line.size(); ++i) os << (line[i - 1] == '\t' ? '\t' : ' ');
  const std::size_t col = std::min<std::size_t>(line.size(), d.span.column - 1);
  const std::size_t width = std::max<std::size_t>(1, std::min(d.span.end - d.span.start, line.size() - col));
  os << std::string(width, '^') << '\n';
}

json diagnostic_json(const CompilationUnit& unit, const Diagnostic& d) {
  return json{{"file", unit.paths[d.span.file]},
              {"line", d.span.line},
              {"column", d.span.column},
              {"start", d.span.start},
              {"end", d.span.end},
              {"severity", std::string(to_string(d.severity))},
              {"code", d.code},
              {"message", d.message}};
}

json diagnostics_json(const CompilationUnit& unit) {
  json list = json::array();
  for (const auto& d : unit.diagnostics) list.push_back(diagnostic_json(unit, d));
  return json{{"diagnostics", std::move(list)},
              {"errors", count(unit.diagnostics, Severity::Error)},
              {"warnings", count(unit.diagnostics, Severity::Warning)}};
}

void print_diagnostics(const CompilationUnit& unit, std::ostream& os) {
  const bool color = color_enabled();
  for (const auto& d : unit.diagnostics) print_text_diagnostic(unit, d, os, color);
}

// ------------------------------------------------------------------ check

struct CheckOptions {
  std::vector<std::string> files;
  std::string format = "text";
  bool deny_warnings = false;
};

int cmd_check(const CheckOptions& opt, std::ostream& out, std::ostream& err) {
  auto unit = load_unit(opt.files, err);
  if (!unit) return RuntimeFailure;
  const std::size_t errors = count(unit->diagnostics, Severity::Error);
  const std::size_t warnings = count(unit->diagnostics, Severity::Warning);
  if (opt.format == "json") {
    out << diagnostics_json(*unit).dump(2) << '\n';
  } else {
    print_diagnostics(*unit, out);
    out << errors << " error(s), " << warnings << " warning(s)\n";
  }
  if (errors > 0 || (opt.deny_warnings && warnings > 0)) return DiagnosticErrors;
  return Success;
}

// ------------------------------------------------------------------- eval

struct EvalOptions {
  std::string spec;
  std::vector<std::string> files;
  std::string scene;
  std::string format = "text";
};

void print_result_text(const query::QueryResult& r, std::ostream& out) {
  if (r.kind == ast::Selector::Amount) {
    out << r.spec << ": Amount = " << r.count() << '\n';
  } else {
    out << r.spec << ": Pose (" << r.poses.size() << ")\n";
    for (const auto& p : r.poses) {
      out << "  " << p.id << "  x=" << syntax::format_number(p.pose.x) << "mm y=" << syntax::format_number(p.pose.y)
          << "mm z=" << syntax::format_number(p.pose.z) << "mm q=(" << syntax::format_number(p.pose.qx) << ", "
          << syntax::format_number(p.pose.qy) << ", " << syntax::format_number(p.pose.qz) << ", "
          << syntax::format_number(p.pose.qw) << ")\n";
    }
  }
  out << "  matched:";
  for (const auto& id : r.matched_ids) out << ' ' << id;
  out << '\n';
  for (const auto& n : r.notes) out << "  note: " << n << '\n';
}

// Shared prelude of eval/run: diagnostics go to stderr; errors stop here.
std::optional<CompilationUnit> checked_unit(const std::vector<std::string>& files, std::ostream& err, int& status) {
  auto unit = load_unit(files, err);
  if (!unit) {
    status = RuntimeFailure;
    return std::nullopt;
  }
  print_diagnostics(*unit, err);
  if (has_errors(unit->diagnostics)) {
    status = DiagnosticErrors;
    return std::nullopt;
  }
  return unit;
}

int cmd_eval(const EvalOptions& opt, std::ostream& out, std::ostream& err) {
  int status = Success;
  auto unit = checked_unit(opt.files, err, status);
  if (!unit) return status;
  const auto& model = unit->analysis.model;
  if (!model.specifications.count(opt.spec)) {
    if (model.dependency_graphs.count(opt.spec)) {
      err << "error: " << opt.spec << " is a DependencyGraph; use run\n";
    } else {
      err << "error: unknown specification '" << opt.spec << "'\n";
    }
    return UsageError;
  }
  query::Scene scene;
  try {
    scene = query::load_scene_file(opt.scene, model.registry);
  } catch (const std::exception& e) {
    err << "error: " << opt.scene << ": " << e.what() << '\n';
    return RuntimeFailure;
  }
  const auto result = query::evaluate_specification(opt.spec, scene, model);
  if (opt.format == "json") {
    out << query::to_json(result).dump(2) << '\n';
  } else {
    print_result_text(result, out);
  }
  return Success;
}

// -------------------------------------------------------------------- run

struct RunOptions {
  std::string name;
  std::vector<std::string> files;
  std::string providers;
  std::string clock = "simulated";
  std::string format = "text";
};

void print_report_text(const exec::ExecutionReport& report, std::ostream& out) {
  out << "plan " << report.plan << '\n';
  for (const auto& e : report.entries) {
    out << "  " << e.spec << ": " << exec::verdict_name(e.verdict);
    if (const auto* m = std::get_if<exec::DeadlineMissed>(&e.verdict)) {
      out << " (deadline " << syntax::format_number(m->deadline_ms) << "ms, elapsed " << m->elapsed_ms << "ms)";
    } else if (const auto* s = std::get_if<exec::Skipped>(&e.verdict)) {
      out << " (blocked by " << s->blocked_by << ")";
    } else if (const auto* f = std::get_if<exec::Failed>(&e.verdict)) {
      out << " (" << f->reason << ")";
    } else if (const auto* c = std::get_if<exec::Completed>(&e.verdict)) {
      out << " in " << *e.elapsed_ms() << "ms";
      if (c->result.kind == ast::Selector::Amount) {
        out << ", Amount = " << c->result.count();
      } else {
        out << ", " << c->result.poses.size() << " pose(s)";
      }
    }
    out << '\n';
  }
}

int cmd_run(const RunOptions& opt, std::ostream& out, std::ostream& err) {
  int status = Success;
  auto unit = checked_unit(opt.files, err, status);
  if (!unit) return status;
  const auto& model = unit->analysis.model;

  exec::DependencyGraph graph;
  try {
    graph = exec::plan_for(model, opt.name);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return UsageError;
  }

  std::unique_ptr<exec::Clock> clock;
  if (opt.clock == "real") {
    clock = std::make_unique<exec::SystemClock>();
  } else {
    clock = std::make_unique<exec::SimulatedClock>();
  }

  std::optional<exec::LatencyProvider> provider;
  try {
    provider.emplace(exec::make_provider(exec::load_provider_config(opt.providers), model.registry, *clock));
  } catch (const std::exception& e) {
    err << "error: " << opt.providers << ": " << e.what() << '\n';
    return RuntimeFailure;
  }

  exec::ExecutionReport report;
  try {
    report = exec::execute_plan(graph, *provider, *clock, model, opt.name);
  } catch (const exec::PlanError& e) {
    err << "error: " << opt.name << ": " << e.what() << '\n';
    return DiagnosticErrors;
  }
  if (opt.format == "json") {
    out << exec::to_json(report).dump(2) << '\n';
  } else {
    print_report_text(report, out);
  }
  return report.all_completed() ? Success : DiagnosticErrors;
}

// -------------------------------------------------------------------- ast

int cmd_ast(const std::vector<std::string>& files, std::ostream& out, std::ostream& err) {
  auto unit = load_unit(files, err);
  if (!unit) return RuntimeFailure;
  print_diagnostics(*unit, err);
  out << syntax::print(unit->ast);
  return has_errors(unit->diagnostics) ? DiagnosticErrors : Success;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"RPSL toolchain: check, evaluate and run robot perception specifications", "rpsl"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"text", "json"};

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Parse and analyze RPSL sources as one compilation unit");
  check_cmd->add_option("files", check.files, "RPSL source files")->required();
  check_cmd->add_option("--format", check.format, "Output format")->check(CLI::IsMember(formats));
  check_cmd->add_flag("--deny-warnings", check.deny_warnings, "Treat warnings as errors");

  EvalOptions eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a Data specification against a scene");
  eval_cmd->add_option("spec", eval.spec, "Specification name")->required();
  eval_cmd->add_option("files", eval.files, "RPSL source files")->required();
  eval_cmd->add_option("--scene", eval.scene, "Scene document (JSON)")->required();
  eval_cmd->add_option("--format", eval.format, "Output format")->check(CLI::IsMember(formats));

  RunOptions runopt;
  auto* run_cmd = app.add_subcommand("run", "Execute a specification or dependency graph with deadlines");
  run_cmd->add_option("name", runopt.name, "Specification or DependencyGraph name")->required();
  run_cmd->add_option("files", runopt.files, "RPSL source files")->required();
  run_cmd->add_option("--providers", runopt.providers, "Provider configuration (JSON)")->required();
  run_cmd->add_option("--clock", runopt.clock, "Clock")->check(CLI::IsMember({"simulated", "real"}));
  run_cmd->add_option("--format", runopt.format, "Output format")->check(CLI::IsMember(formats));

  std::vector<std::string> ast_files;
  auto* ast_cmd = app.add_subcommand("ast", "Print the canonical form of the parsed sources");
  ast_cmd->add_option("files", ast_files, "RPSL source files")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Success : UsageError;
  }

  if (check_cmd->parsed()) return cmd_check(check, out, err);
  if (eval_cmd->parsed()) return cmd_eval(eval, out, err);
  if (run_cmd->parsed()) return cmd_run(runopt, out, err);
  return cmd_ast(ast_files, out, err);
}

}  // namespace rpsl::cli
