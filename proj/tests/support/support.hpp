#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rpsl/analyzer/analyzer.hpp"
#include "rpsl/syntax/ast.hpp"

namespace rpsl::testing {

std::filesystem::path corpus_dir();
std::string read_file(const std::filesystem::path& path);

struct Compiled {
  ast::Ast ast;
  std::vector<Diagnostic> parse_diagnostics;
  analysis::AnalysisResult analysis;
};

/// Parses each source (file id = index) and analyzes them as one unit.
Compiled compile_sources(const std::vector<std::string>& sources);
/// Same, for corpus file names.
Compiled compile_corpus(const std::vector<std::string>& names);

// ---------------------------------------------------------------------------
// Brute-force reference for Data specifications over the box model.
//
// Everything here is written against plain numbers: the box region and the
// prototype coordinates are tabulated below, not taken from the engine.

namespace oracle {

inline const std::array<std::string, 6> dims = {"Size.Height", "Size.Width", "Size.Length",
                                                "RGB.Red",     "RGB.Green",  "RGB.Blue"};

struct Bounds {
  double lo, hi;
};
/// myBox region in base units, same order as `dims`.
inline const std::array<Bounds, 6> box = {{{20, 40}, {20, 40}, {100, 100}, {0, 0}, {0, 0}, {100, 130}}};
/// Distance scale per axis: interval width, 255 for a flat RGB axis, 1 for a
/// flat Size axis.
inline const std::array<double, 6> scale = {20, 20, 1, 255, 255, 30};

using Point = std::array<double, 6>;
inline const std::map<std::string, Point> prototypes = {
    {"darkBlueBox", {30, 30, 100, 0, 0, 139}},
    {"paleBox", {25, 35, 100, 10, 20, 110}},
};
/// Source declaring `paleBox`; compiled next to box_model.rpsl.
extern const char* const extra_prototypes;

struct Instance {
  std::string id;
  std::array<std::optional<double>, 6> values;  // base units
  std::optional<std::array<double, 7>> pose;
};

enum class Op { Eq, Ne, Lt, Le, Gt, Ge };

struct Cond {
  enum class Kind { Cmp, And, Or } kind = Kind::Cmp;
  int dim = -1;  // -1: Similarity(EuclideanDistance)
  Op op = Op::Eq;
  double value = 0;
  std::string text;  // rendered comparison (leaves only)
  std::shared_ptr<Cond> left, right;
};

struct Spec {
  std::string name;
  bool pose = false;
  std::string target;  // "myBox" or a prototype name
  std::shared_ptr<Cond> cond;
};

struct Outcome {
  std::vector<std::string> matched;
  std::vector<std::pair<std::string, std::array<double, 7>>> poses;
};

Outcome evaluate(const Spec& spec, const std::vector<Instance>& scene);

// Generators.
std::vector<Instance> random_scene(std::mt19937_64& rng, std::size_t max_instances);
std::string scene_json(const std::vector<Instance>& scene, std::mt19937_64& rng);
std::shared_ptr<Cond> random_condition(std::mt19937_64& rng, bool similarity, int depth);
Spec random_spec(std::mt19937_64& rng, const std::string& name);
std::string render(const Spec& spec);
std::string render(const Cond& cond);

}  // namespace oracle
}  // namespace rpsl::testing
