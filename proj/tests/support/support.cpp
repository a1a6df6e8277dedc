#include "support.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "rpsl/syntax/parser.hpp"

namespace rpsl::testing {

std::filesystem::path corpus_dir() { return RPSL_CORPUS_DIR; }

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Compiled compile_sources(const std::vector<std::string>& sources) {
  Compiled out;
  std::vector<ast::Ast> units;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    auto r = syntax::parse_source(sources[i], static_cast<FileId>(i));
    units.push_back(std::move(r.ast));
    out.parse_diagnostics.insert(out.parse_diagnostics.end(), r.diagnostics.begin(), r.diagnostics.end());
  }
  out.ast = ast::merge(std::move(units));
  out.analysis = analysis::resolve_and_check(out.ast);
  return out;
}

Compiled compile_corpus(const std::vector<std::string>& names) {
  std::vector<std::string> sources;
  for (const auto& n : names) sources.push_back(read_file(corpus_dir() / n));
  return compile_sources(sources);
}

namespace oracle {

const char* const extra_prototypes = R"(
paleBox: Prototype {
	use_concept myBox
	v: Values {
		Point(Size.Height, 2.5cm)
		Point(Size.Width, 35mm)
		Point(Size.Length, 0.1m)
		Point(RGB.Red, 10)
		Point(RGB.Green, 20)
		Point(RGB.Blue, 110)
	}
}
)";

namespace {

const std::array<std::vector<double>, 6> grid = {{
    {10, 15, 20, 25, 30, 35, 40, 45, 50},
    {10, 15, 20, 25, 30, 35, 40, 45, 50},
    {90, 100, 100, 110},
    {0, 0, 5, 10},
    {0, 0, 10, 20},
    {95, 100, 110, 115, 130, 139, 140},
}};
const std::array<double, 6> thresholds = {0, 0.05, 0.25, 0.5, 1, 1.5};

std::string shortest(double v) {
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& xs) {
  return xs[std::uniform_int_distribution<std::size_t>(0, xs.size() - 1)(rng)];
}

bool chance(std::mt19937_64& rng, double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; }

// A length in mm written in mm, cm or m, whichever renders back exactly.
std::pair<std::string, std::string> length_text(std::mt19937_64& rng, double mm) {
  const int u = std::uniform_int_distribution<int>(0, 3)(rng);
  if (u == 1 && std::stod(shortest(mm / 10)) * 10 == mm) return {shortest(mm / 10), "cm"};
  if (u == 2 && std::stod(shortest(mm / 1000)) * 1000 == mm) return {shortest(mm / 1000), "m"};
  if (u == 3) return {shortest(mm), ""};
  return {shortest(mm), "mm"};
}

bool apply(Op op, double a, double b) {
  switch (op) {
    case Op::Eq: return a == b;
    case Op::Ne: return a != b;
    case Op::Lt: return a < b;
    case Op::Le: return a <= b;
    case Op::Gt: return a > b;
    case Op::Ge: return a >= b;
  }
  return false;
}

const char* op_text(Op op) {
  static const char* t[] = {"==", "!=", "<", "<=", ">", ">="};
  return t[static_cast<int>(op)];
}

double distance(const Instance& inst, const Point& p) {
  double sum = 0;
  for (std::size_t i = 0; i < 6; ++i) {
    double d = (*inst.values[i] - p[i]) / scale[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

bool holds(const Cond& c, const Instance& inst, const Point* proto) {
  switch (c.kind) {
    case Cond::Kind::And: return holds(*c.left, inst, proto) && holds(*c.right, inst, proto);
    case Cond::Kind::Or: return holds(*c.left, inst, proto) || holds(*c.right, inst, proto);
    case Cond::Kind::Cmp: break;
  }
  if (c.dim < 0) {
    const double d = distance(inst, *proto);
    if (c.op == Op::Eq) return std::abs(d - c.value) <= 1e-9;
    if (c.op == Op::Ne) return std::abs(d - c.value) > 1e-9;
    return apply(c.op, d, c.value);
  }
  const auto& v = inst.values[c.dim];
  return v && apply(c.op, *v, c.value);
}

}  // namespace

Outcome evaluate(const Spec& spec, const std::vector<Instance>& scene) {
  const Point* proto = nullptr;
  if (auto it = prototypes.find(spec.target); it != prototypes.end()) proto = &it->second;

  std::vector<const Instance*> sorted;
  for (const auto& i : scene) sorted.push_back(&i);
  std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return a->id < b->id; });

  Outcome out;
  for (const auto* inst : sorted) {
    bool candidate = true;
    for (std::size_t d = 0; d < 6; ++d) {
      if (!inst->values[d]) candidate = false;
      else if (!proto && (*inst->values[d] < box[d].lo || *inst->values[d] > box[d].hi)) candidate = false;
    }
    if (!candidate) continue;
    if (spec.cond && !holds(*spec.cond, *inst, proto)) continue;
    out.matched.push_back(inst->id);
    if (spec.pose && inst->pose) out.poses.emplace_back(inst->id, *inst->pose);
  }
  return out;
}

std::vector<Instance> random_scene(std::mt19937_64& rng, std::size_t max_instances) {
  const auto n = std::uniform_int_distribution<std::size_t>(0, max_instances)(rng);
  std::vector<int> ids(400);
  for (int i = 0; i < 400; ++i) ids[i] = i;
  std::shuffle(ids.begin(), ids.end(), rng);

  std::vector<Instance> scene;
  for (std::size_t k = 0; k < n; ++k) {
    Instance inst;
    char id[16];
    std::snprintf(id, sizeof id, "obj%03d", ids[k]);
    inst.id = id;
    if (chance(rng, 0.15)) {
      const auto& p = std::next(prototypes.begin(), chance(rng, 0.5) ? 0 : 1)->second;
      for (std::size_t d = 0; d < 6; ++d) inst.values[d] = p[d];
    } else {
      for (std::size_t d = 0; d < 6; ++d) inst.values[d] = pick(rng, grid[d]);
    }
    for (auto& v : inst.values)
      if (chance(rng, 0.04)) v.reset();
    if (chance(rng, 0.7)) {
      std::normal_distribution<double> g(0, 1);
      std::array<double, 4> q{g(rng), g(rng), g(rng), g(rng)};
      double norm = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
      if (norm < 1e-3) q = {0, 0, 0, norm = 1};
      std::uniform_real_distribution<double> pos(-800, 800);
      inst.pose = std::array<double, 7>{pos(rng), pos(rng), pos(rng), q[0] / norm, q[1] / norm, q[2] / norm,
                                        q[3] / norm};
    }
    scene.push_back(std::move(inst));
  }
  return scene;
}

std::string scene_json(const std::vector<Instance>& scene, std::mt19937_64& rng) {
  std::ostringstream os;
  os << R"({"frame": "base_link", "stamp_ms": 0, "instances": [)";
  for (std::size_t k = 0; k < scene.size(); ++k) {
    const auto& inst = scene[k];
    if (k) os << ",";
    os << R"({"id": ")" << inst.id << R"(", "values": [)";
    bool first = true;
    for (std::size_t d = 0; d < 6; ++d) {
      if (!inst.values[d]) continue;
      if (!first) os << ",";
      first = false;
      os << R"({"dim": ")" << dims[d] << R"(", "value": )";
      if (d < 3) {
        auto [num, unit] = length_text(rng, *inst.values[d]);
        os << num;
        if (!unit.empty()) os << R"(, "unit": ")" << unit << '"';
      } else {
        os << shortest(*inst.values[d]);
        if (chance(rng, 0.5)) os << R"(, "unit": "none")";
      }
      os << "}";
    }
    os << "]";
    if (inst.pose) {
      static const char* keys[] = {"x", "y", "z", "qx", "qy", "qz", "qw"};
      os << R"(, "pose": {)";
      for (int i = 0; i < 7; ++i) os << (i ? ", " : "") << '"' << keys[i] << R"(": )" << shortest((*inst.pose)[i]);
      os << "}";
    }
    os << "}";
  }
  os << "]}";
  return os.str();
}

std::shared_ptr<Cond> random_condition(std::mt19937_64& rng, bool similarity, int depth) {
  auto c = std::make_shared<Cond>();
  if (depth > 0 && chance(rng, 0.45)) {
    c->kind = chance(rng, 0.5) ? Cond::Kind::And : Cond::Kind::Or;
    c->left = random_condition(rng, similarity, depth - 1);
    c->right = random_condition(rng, similarity, depth - 1);
    return c;
  }
  c->op = static_cast<Op>(std::uniform_int_distribution<int>(0, 5)(rng));
  if (similarity && chance(rng, 0.35)) {
    c->value = thresholds[std::uniform_int_distribution<std::size_t>(0, thresholds.size() - 1)(rng)];
    c->text = std::string("Similarity(EuclideanDistance) ") + op_text(c->op) + " " + shortest(c->value);
    return c;
  }
  c->dim = std::uniform_int_distribution<int>(0, 5)(rng);
  c->value = pick(rng, grid[c->dim]);
  const std::string& full = dims[c->dim];
  std::string path;
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0: path = full; break;
    case 1: path = full.substr(full.find('.') + 1); break;
    default: path = "myBox." + full; break;
  }
  std::string rhs;
  if (c->dim < 3) {
    auto [num, unit] = length_text(rng, c->value);
    rhs = num + unit;
  } else {
    rhs = shortest(c->value);
  }
  c->text = path + " " + op_text(c->op) + " " + rhs;
  return c;
}

std::string render(const Cond& c) {
  switch (c.kind) {
    case Cond::Kind::And: return "(" + render(*c.left) + " and " + render(*c.right) + ")";
    case Cond::Kind::Or: return "(" + render(*c.left) + " OR " + render(*c.right) + ")";
    case Cond::Kind::Cmp: break;
  }
  return c.text;
}

Spec random_spec(std::mt19937_64& rng, const std::string& name) {
  Spec s;
  s.name = name;
  s.pose = chance(rng, 0.5);
  const int t = std::uniform_int_distribution<int>(0, 2)(rng);
  s.target = t == 0 ? "myBox" : t == 1 ? "darkBlueBox" : "paleBox";
  if (!chance(rng, 0.15)) s.cond = random_condition(rng, t != 0, 3);
  return s;
}

std::string render(const Spec& s) {
  std::string out = s.name + ": Specification {\n\td: Data {\n\t\tget " + (s.pose ? "Pose" : "Amount") + " from " +
                    s.target;
  if (s.cond) out += " where " + render(*s.cond);
  return out + "\n\t}\n}\n";
}

}  // namespace oracle
}  // namespace rpsl::testing
