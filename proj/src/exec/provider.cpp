#include "rpsl/exec/provider.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace rpsl::exec {

void LatencyProvider::set_default(std::optional<query::Scene> scene, std::int64_t latency_ms) {
  default_scene_ = std::move(scene);
  default_latency_ms_ = latency_ms;
}

void LatencyProvider::set(const std::string& spec, std::optional<query::Scene> scene,
                          std::optional<std::int64_t> latency_ms) {
  per_spec_[spec] = Entry{std::move(scene), latency_ms};
}

std::int64_t LatencyProvider::latency_for(const std::string& spec) const {
  const auto it = per_spec_.find(spec);
  if (it != per_spec_.end() && it->second.latency_ms) return *it->second.latency_ms;
  return default_latency_ms_;
}

ProviderResponse LatencyProvider::respond(const std::string& spec, std::int64_t request_stamp_ms) {
  const query::Scene* scene = default_scene_ ? &*default_scene_ : nullptr;
  if (const auto it = per_spec_.find(spec); it != per_spec_.end() && it->second.scene) scene = &*it->second.scene;
  if (!scene) throw std::runtime_error("no scene configured for specification '" + spec + "'");
  clock_.wait(latency_for(spec));
  return ProviderResponse{*scene, std::max(clock_.now(), request_stamp_ms)};
}

namespace {

std::int64_t latency_value(const nlohmann::json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    throw ConfigError(where + ": expected a non-negative integer");
  }
  return v.get<std::int64_t>();
}

std::filesystem::path path_value(const nlohmann::json& v, const std::string& where) {
  if (!v.is_string()) throw ConfigError(where + ": expected a path string");
  return v.get<std::string>();
}

}  // namespace

ProviderConfig parse_provider_config(std::string_view document) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(document.begin(), document.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("$: expected an object");
  ProviderConfig cfg;
  for (const auto& [key, value] : root.items()) {
    if (key == "default_latency_ms") {
      cfg.default_latency_ms = latency_value(value, "$.default_latency_ms");
    } else if (key == "default_scene") {
      cfg.default_scene = path_value(value, "$.default_scene");
    } else if (key == "single_request") {
      if (!value.is_boolean()) throw ConfigError("$.single_request: expected a boolean");
      cfg.single_request = value.get<bool>();
    } else if (key == "per_spec") {
      if (!value.is_object()) throw ConfigError("$.per_spec: expected an object");
      for (const auto& [name, entry] : value.items()) {
        const std::string where = "$.per_spec." + name;
        if (!entry.is_object()) throw ConfigError(where + ": expected an object");
        ProviderConfig::PerSpec ps;
        for (const auto& [k, v] : entry.items()) {
          if (k == "latency_ms") {
            ps.latency_ms = latency_value(v, where + ".latency_ms");
          } else if (k == "scene") {
            ps.scene = path_value(v, where + ".scene");
          } else {
            throw ConfigError(where + "." + k + ": unexpected key");
          }
        }
        cfg.per_spec.emplace(name, std::move(ps));
      }
    } else {
      throw ConfigError("$." + key + ": unexpected key");
    }
  }
  if (!root.contains("default_latency_ms")) throw ConfigError("$.default_latency_ms: missing required key");
  return cfg;
}

ProviderConfig load_provider_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read provider config " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_provider_config(buf.str());
}

LatencyProvider make_provider(const ProviderConfig& config, const model::DomainRegistry& registry, Clock& clock) {
  LatencyProvider p(clock);
  std::optional<query::Scene> default_scene;
  if (config.default_scene) default_scene = query::load_scene_file(*config.default_scene, registry);
  p.set_default(std::move(default_scene), config.default_latency_ms);
  for (const auto& [name, ps] : config.per_spec) {
    std::optional<query::Scene> scene;
    if (ps.scene) scene = query::load_scene_file(*ps.scene, registry);
    p.set(name, std::move(scene), ps.latency_ms);
  }
  p.set_single_request(config.single_request);
  return p;
}

}  // namespace rpsl::exec
