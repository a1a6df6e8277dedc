#include "rpsl/query/scene.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace rpsl::query {

using nlohmann::json;

SceneError::SceneError(Kind k, std::string p, const std::string& reason)
    : std::runtime_error(p + ": " + reason), kind(k), path(std::move(p)) {}

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& reason) {
  throw SceneError(SceneError::Kind::Schema, path, reason);
}

void only_keys(const json& obj, const std::string& path, std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || a == key;
    if (!ok) schema_error(path + "." + key, "unexpected key");
  }
}

const json& require(const json& obj, const std::string& path, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) schema_error(path + "." + key, "missing required key");
  return *it;
}

double number_at(const json& obj, const std::string& path, const char* key) {
  const json& v = require(obj, path, key);
  if (!v.is_number()) schema_error(path + "." + key, "expected a number");
  return v.get<double>();
}

std::int64_t integer_at(const json& v, const std::string& path) {
  if (!v.is_number_integer()) schema_error(path, "expected an integer");
  return v.get<std::int64_t>();
}

Pose parse_pose(const json& j, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object");
  only_keys(j, path, {"x", "y", "z", "qx", "qy", "qz", "qw"});
  Pose p;
  p.x = number_at(j, path, "x");
  p.y = number_at(j, path, "y");
  p.z = number_at(j, path, "z");
  p.qx = number_at(j, path, "qx");
  p.qy = number_at(j, path, "qy");
  p.qz = number_at(j, path, "qz");
  p.qw = number_at(j, path, "qw");
  const double norm = std::sqrt(p.qx * p.qx + p.qy * p.qy + p.qz * p.qz + p.qw * p.qw);
  if (std::abs(norm - 1.0) > quaternion_norm_tolerance) {
    schema_error(path, "quaternion norm " + std::to_string(norm) + " is not 1");
  }
  return p;
}

InstanceRecord parse_instance(const json& j, const std::string& path, const model::DomainRegistry& registry) {
  if (!j.is_object()) schema_error(path, "expected an object");
  only_keys(j, path, {"id", "values", "pose", "stamp_ms"});
  InstanceRecord inst;
  const json& id = require(j, path, "id");
  if (!id.is_string()) schema_error(path + ".id", "expected a string");
  inst.id = id.get<std::string>();

  const json& values = require(j, path, "values");
  if (!values.is_array()) schema_error(path + ".values", "expected an array");
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::string vpath = path + ".values[" + std::to_string(i) + "]";
    const json& v = values[i];
    if (!v.is_object()) schema_error(vpath, "expected an object");
    only_keys(v, vpath, {"dim", "value", "unit"});
    const json& dim_name = require(v, vpath, "dim");
    if (!dim_name.is_string()) schema_error(vpath + ".dim", "expected a string");
    const auto key = model::parse_dimension_key(dim_name.get<std::string>());
    const model::QualityDimension* dim = key ? registry.find_dimension(*key) : nullptr;
    if (!dim) {
      throw SceneError(SceneError::Kind::UnknownDimension, vpath + ".dim",
                       "unknown dimension '" + dim_name.get<std::string>() + "'");
    }
    model::Unit unit = dim->default_unit();
    if (const auto u = v.find("unit"); u != v.end()) {
      if (!u->is_string()) schema_error(vpath + ".unit", "expected a string");
      const auto parsed = model::unit_from_symbol(u->get<std::string>());
      if (!parsed) schema_error(vpath + ".unit", "unknown unit '" + u->get<std::string>() + "'");
      unit = *parsed;
    }
    if (unit.kind != dim->unit_kind) {
      schema_error(vpath + ".unit", key->str() + " is " + std::string(model::to_string(dim->unit_kind)) + ", not " +
                                        std::string(model::to_string(unit.kind)));
    }
    const model::Quantity q{number_at(v, vpath, "value"), unit};
    if (dim->scale == model::Scale::OrdinalInteger) {
      const double base = model::to_base(q);
      if (std::floor(base) != base) schema_error(vpath + ".value", key->str() + " is ordinal; expected an integer");
    }
    if (inst.knoxel.has(*key)) schema_error(vpath + ".dim", "duplicate value for " + key->str());
    inst.knoxel.set(*key, q);
  }
  if (const auto p = j.find("pose"); p != j.end()) inst.pose = parse_pose(*p, path + ".pose");
  if (const auto s = j.find("stamp_ms"); s != j.end()) inst.stamp_ms = integer_at(*s, path + ".stamp_ms");
  return inst;
}

}  // namespace

Scene load_scene(std::string_view document, const model::DomainRegistry& registry) {
  json root;
  try {
    root = json::parse(document.begin(), document.end());
  } catch (const json::parse_error& e) {
    schema_error("$", std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) schema_error("$", "expected an object");
  only_keys(root, "$", {"frame", "stamp_ms", "instances"});
  Scene scene;
  const json& frame = require(root, "$", "frame");
  if (!frame.is_string()) schema_error("$.frame", "expected a string");
  scene.frame = frame.get<std::string>();
  scene.stamp_ms = integer_at(require(root, "$", "stamp_ms"), "$.stamp_ms");
  const json& instances = require(root, "$", "instances");
  if (!instances.is_array()) schema_error("$.instances", "expected an array");
  std::set<std::string> ids;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const std::string path = "$.instances[" + std::to_string(i) + "]";
    InstanceRecord inst = parse_instance(instances[i], path, registry);
    if (!ids.insert(inst.id).second) {
      throw SceneError(SceneError::Kind::DuplicateInstanceId, path + ".id", "duplicate instance id '" + inst.id + "'");
    }
    scene.instances.push_back(std::move(inst));
  }
  return scene;
}

Scene load_scene_file(const std::filesystem::path& path, const model::DomainRegistry& registry) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read scene file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_scene(buf.str(), registry);
}

}  // namespace rpsl::query
