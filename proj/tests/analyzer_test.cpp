#include <gtest/gtest.h>

#include "rpsl/syntax/parser.hpp"
#include "rpsl/syntax/printer.hpp"
#include "support.hpp"

using namespace rpsl;
using rpsl::testing::compile_corpus;
using rpsl::testing::compile_sources;
using rpsl::testing::read_file;

namespace {

const std::string box_model = read_file(rpsl::testing::corpus_dir() / "box_model.rpsl");

std::vector<Diagnostic> check(const std::string& extra) {
  auto c = compile_sources({box_model, extra});
  EXPECT_TRUE(c.parse_diagnostics.empty()) << c.parse_diagnostics[0].message;
  return c.analysis.diagnostics;
}

std::vector<std::string> codes_of(const std::vector<Diagnostic>& ds, Severity s = Severity::Error) {
  std::vector<std::string> out;
  for (const auto& d : ds)
    if (d.severity == s) out.push_back(d.code);
  return out;
}

std::string spec(const std::string& body) { return "s: Specification { d: Data { " + body + " } }"; }

}  // namespace

TEST(Analyzer, BoxModelResolves) {
  auto c = compile_corpus({"box_model.rpsl"});
  const auto& m = c.analysis.model;
  ASSERT_TRUE(m.concepts.count("myConcepts.myBox"));
  ASSERT_TRUE(m.prototypes.count("darkBlueBox"));
  EXPECT_EQ(m.prototypes.at("darkBlueBox").concept_name, "myConcepts.myBox");
  EXPECT_EQ(count(c.analysis.diagnostics, Severity::Error), 0u);
  ASSERT_EQ(count(c.analysis.diagnostics, Severity::Warning), 1u);
  const auto& w = c.analysis.diagnostics[0];
  EXPECT_EQ(w.code, "W001");
  EXPECT_NE(w.message.find("RGB.Blue = 139"), std::string::npos);
  EXPECT_NE(w.message.find("[100, 130]"), std::string::npos);
  // the span covers the offending Point entry
  EXPECT_EQ(box_model.substr(w.span.start, w.span.end - w.span.start), "Point(myBox.RGB.Blue, 139)");
}

TEST(Analyzer, SpecificationsOfTheBoxModel) {
  auto c = compile_corpus({"box_model.rpsl", "box_specs.rpsl"});
  const auto& d = c.analysis.diagnostics;
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0].code, "W001");
  EXPECT_EQ(d[1].code, "W002");
  EXPECT_NE(d[1].message.find("'boxSpec'"), std::string::npos);
  const auto& m = c.analysis.model;
  EXPECT_EQ(m.specifications.size(), 4u);
  EXPECT_EQ(m.dependency_graphs.size(), 1u);
  EXPECT_EQ(m.specifications.at("darkBoxDeadlineSpec").deadline_ms, 3000.0);
  EXPECT_EQ(m.specifications.at("darkBoxSpec").target_kind, analysis::TargetKind::Prototype);
  EXPECT_EQ(m.specifications.at("boxSpec").target, "myConcepts.myBox");
  const auto& edges = m.dependency_graphs.at("dependSpec").edges;
  ASSERT_EQ(edges.size(), 1u);
  EXPECT_EQ(edges[0], (std::pair<std::string, std::string>{"darkBoxSpec", "darkBoxPoseSpec"}));
}

TEST(Analyzer, UnknownConceptSpan) {
  const std::string src = spec("get Amount from nosuch");
  auto d = check(src);
  ASSERT_EQ(codes_of(d), std::vector<std::string>{"E002"});
  for (const auto& x : d)
    if (x.code == "E002") EXPECT_EQ(src.substr(x.span.start, x.span.end - x.span.start), "nosuch");
}

TEST(Analyzer, SimilarityNeedsPrototype) {
  EXPECT_EQ(codes_of(check(spec("get Amount from myBox where Similarity(EuclideanDistance) == 0"))),
            std::vector<std::string>{"E009"});
  EXPECT_EQ(codes_of(check(spec("get Amount from darkBlueBox where Similarity(Manhattan) == 0"))),
            std::vector<std::string>{"E010"});
}

TEST(Analyzer, ErrorCodes) {
  EXPECT_EQ(codes_of(check("use Namespace nowhere")), std::vector<std::string>{"E001"});
  EXPECT_EQ(codes_of(check("n: Namespace { c: Concept { use_domain Colour p: Polytope { Point(Colour.R, 1) } } }")),
            std::vector<std::string>{"E003"});
  EXPECT_EQ(codes_of(check("n: Namespace { c: Concept { use_domain Size p: Polytope { Point(Size.Height, 1mm) "
                           "Point(Size.Width, 1mm) Point(Size.Length, 1mm) Point(Size.Depth, 1mm) } } }")),
            std::vector<std::string>{"E004"});
  EXPECT_EQ(codes_of(check(spec("get Amount from myBox where Size.Length > 3s"))), std::vector<std::string>{"E005"});
  EXPECT_EQ(codes_of(check(spec("get Amount from myBox ensure Deadline(3mm)"))), std::vector<std::string>{"E005"});
  EXPECT_EQ(codes_of(check("n: Namespace { c: Concept { use_domain Size p: Polytope { Point(Size.Height, 1mm) } } }")),
            std::vector<std::string>{"E006"});
  EXPECT_EQ(codes_of(check("myConcepts: Namespace { myBox: Concept { use_domain RGB p: Polytope { Point(RGB.Red, 1) "
                           "Point(RGB.Green, 1) Point(RGB.Blue, 1) } } }")),
            std::vector<std::string>{"E007"});
  EXPECT_EQ(codes_of(check("g: Specification { d: DependencyGraph { ghost before s } }\n" +
                           spec("get Amount from myBox"))),
            std::vector<std::string>{"E008"});
  EXPECT_EQ(codes_of(check("n: Namespace { c: Concept { use_domain RGB p: Polytope { Point(RGB.Red, 1.5) "
                           "Point(RGB.Green, 1) Point(RGB.Blue, 1) } } }")),
            std::vector<std::string>{"E011"});
}

TEST(Analyzer, AmbiguousBareConcept) {
  auto d = check(R"(
other: Namespace { myBox: Concept { use_domain RGB p: Polytope { Point(RGB.Red, 1) Point(RGB.Green, 1) Point(RGB.Blue, 1) } } }
use Namespace other
)" + spec("get Amount from myBox"));
  EXPECT_EQ(codes_of(d), std::vector<std::string>{"E007"});
  EXPECT_TRUE(codes_of(check("use Namespace myConcepts\n" + spec("get Amount from myConcepts.myBox"))).empty());
}

TEST(Analyzer, DimensionPathSpellings) {
  for (const char* path : {"myBox.Size.Width", "Size.Width", "Width", "darkBlueBox.Size.Width"}) {
    auto d = check(spec(std::string("get Amount from darkBlueBox where ") + path + " < 4cm"));
    EXPECT_TRUE(codes_of(d).empty()) << path;
  }
  EXPECT_EQ(codes_of(check(spec("get Amount from myBox where other.Size.Width < 4cm"))),
            std::vector<std::string>{"E004"});
}

TEST(Analyzer, ModelKeepsCleanEntitiesOnly) {
  auto c = compile_sources({box_model, spec("get Amount from nosuch") + "\nok: Specification { d: Data { get Amount from myBox } }"});
  EXPECT_FALSE(c.analysis.model.specifications.count("s"));
  EXPECT_TRUE(c.analysis.model.specifications.count("ok"));
}

TEST(Lint, PrototypeAtRegionCentreIsQuiet) {
  auto c = compile_sources({R"(
n: Namespace { c: Concept { use_domain Size p: Polytope {
  Point(Size.Height, 20mm) Point(Size.Height, 40mm) Point(Size.Width, 1cm) Point(Size.Width, 3cm) Point(Size.Length, 5mm) } } }
centre: Prototype { use_concept n.c v: Values { Point(Size.Height, 30mm) Point(Size.Width, 20mm) Point(Size.Length, 5mm) } }
)"});
  EXPECT_TRUE(c.analysis.diagnostics.empty());
  EXPECT_TRUE(analysis::lint_prototypes(c.analysis.model).empty());
}

TEST(Lint, Satisfiability) {
  auto sat = [](const std::string& where) {
    auto c = compile_sources({box_model, spec("get Amount from myBox where " + where)});
    EXPECT_TRUE(codes_of(c.analysis.diagnostics).empty()) << where;
    return analysis::condition_satisfiable(c.analysis.model, c.analysis.model.specifications.at("s"));
  };
  EXPECT_FALSE(sat("Size.Length > 100mm"));
  EXPECT_TRUE(sat("Size.Length >= 100mm"));
  EXPECT_FALSE(sat("Size.Length != 100mm"));
  EXPECT_TRUE(sat("Size.Length > 100mm or Width < 25mm"));
  EXPECT_FALSE(sat("Width < 25mm and Width > 30mm"));
  EXPECT_FALSE(sat("Blue > 100 and Blue < 101"));  // no integer strictly between
  EXPECT_TRUE(sat("Height > 20mm and Height < 21mm"));
  EXPECT_FALSE(sat("Red == 1"));
  auto proto = compile_sources({box_model, spec("get Amount from darkBlueBox where Similarity(EuclideanDistance) < 0")});
  EXPECT_FALSE(analysis::condition_satisfiable(proto.analysis.model, proto.analysis.model.specifications.at("s")));
}

// Every name inside the resolved model points at something that exists.
TEST(Properties, NoDanglingReferences) {
  for (const auto& files : std::vector<std::vector<std::string>>{
           {"box_model.rpsl", "box_specs.rpsl", "desk_specs.rpsl"}, {"extensions.rpsl"}}) {
    auto c = compile_corpus(files);
    const auto& m = c.analysis.model;
    for (const auto& [name, concept_] : m.concepts) {
      EXPECT_EQ(name, concept_.qualified_name());
      for (const auto& d : concept_.domains) EXPECT_NE(m.registry.find(d.name), nullptr);
      for (const auto& [key, iv] : concept_.region.intervals) {
        EXPECT_NE(m.registry.find_dimension(key), nullptr) << key.str();
        EXPECT_LE(iv.lo, iv.hi);
      }
    }
    for (const auto& [name, p] : m.prototypes) {
      ASSERT_TRUE(m.concepts.count(p.concept_name)) << name;
      for (const auto& [key, q] : p.point.coords())
        EXPECT_TRUE(m.concepts.at(p.concept_name).region.find(key)) << key.str();
    }
    std::function<void(const analysis::ResolvedCondition&, const analysis::ResolvedConcept&)> walk =
        [&](const analysis::ResolvedCondition& cond, const analysis::ResolvedConcept& concept_) {
          if (const auto* a = std::get_if<analysis::ResolvedAnd>(&cond.node)) {
            walk(*a->left, concept_), walk(*a->right, concept_);
          } else if (const auto* o = std::get_if<analysis::ResolvedOr>(&cond.node)) {
            walk(*o->left, concept_), walk(*o->right, concept_);
          } else {
            const auto& cmp = std::get<analysis::ResolvedComparison>(cond.node);
            if (const auto* k = std::get_if<model::DimensionKey>(&cmp.lhs))
              EXPECT_TRUE(concept_.region.find(*k)) << k->str();
            else
              EXPECT_TRUE(model::is_known_measure(std::get<analysis::SimilarityRef>(cmp.lhs).measure));
          }
        };
    for (const auto& [name, s] : m.specifications) {
      if (s.target_kind == analysis::TargetKind::Concept) ASSERT_TRUE(m.concepts.count(s.target)) << name;
      else ASSERT_TRUE(m.prototypes.count(s.target)) << name;
      const auto* concept_ = m.concept_for(s);
      ASSERT_NE(concept_, nullptr);
      if (s.condition) walk(*s.condition, *concept_);
    }
    for (const auto& [name, g] : m.dependency_graphs)
      for (const auto& [a, b] : g.edges) {
        EXPECT_TRUE(m.specifications.count(a)) << a;
        EXPECT_TRUE(m.specifications.count(b)) << b;
      }
  }
}

TEST(Properties, ReanalysingPrintedSourceIsIsomorphic) {
  for (const auto& files : std::vector<std::vector<std::string>>{
           {"box_model.rpsl", "box_specs.rpsl", "desk_specs.rpsl"}, {"extensions.rpsl"}}) {
    auto first = compile_corpus(files);
    auto second = compile_sources({syntax::print(first.ast)});
    const auto& a = first.analysis.model;
    const auto& b = second.analysis.model;
    EXPECT_EQ(codes_of(first.analysis.diagnostics), codes_of(second.analysis.diagnostics));
    EXPECT_EQ(codes_of(first.analysis.diagnostics, Severity::Warning),
              codes_of(second.analysis.diagnostics, Severity::Warning));
    ASSERT_EQ(a.concepts.size(), b.concepts.size());
    for (const auto& [name, c] : a.concepts) {
      ASSERT_TRUE(b.concepts.count(name));
      EXPECT_EQ(c.region.intervals, b.concepts.at(name).region.intervals);
    }
    ASSERT_EQ(a.prototypes.size(), b.prototypes.size());
    for (const auto& [name, p] : a.prototypes) EXPECT_TRUE(p.point == b.prototypes.at(name).point);
    ASSERT_EQ(a.specifications.size(), b.specifications.size());
    for (const auto& [name, s] : a.specifications) {
      const auto& t = b.specifications.at(name);
      EXPECT_EQ(s.target, t.target);
      EXPECT_EQ(s.selector, t.selector);
      EXPECT_EQ(s.deadline_ms, t.deadline_ms);
      EXPECT_EQ(s.condition ? analysis::describe(*s.condition) : "", t.condition ? analysis::describe(*t.condition) : "");
    }
    ASSERT_EQ(a.dependency_graphs.size(), b.dependency_graphs.size());
    for (const auto& [name, g] : a.dependency_graphs) EXPECT_EQ(g.edges, b.dependency_graphs.at(name).edges);
  }
}

TEST(Properties, DiagnosticsAreOrderedAndStable) {
  const std::vector<std::string> sources = {
      box_model, spec("get Amount from nosuch") + "\nt: Specification { d: Data { get Amount from myBox where Size.Length > 3s } }",
      "use Namespace nowhere\nu: Specification { d: Data { get Amount from darkBlueBox where Similarity(X) == 0 } }"};
  auto first = compile_sources(sources).analysis.diagnostics;
  EXPECT_EQ(first, compile_sources(sources).analysis.diagnostics);
  for (std::size_t i = 1; i < first.size(); ++i) {
    const auto& p = first[i - 1].span;
    const auto& q = first[i].span;
    EXPECT_TRUE(p.file < q.file || (p.file == q.file && p.start <= q.start));
  }
}
