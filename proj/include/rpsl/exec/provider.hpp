#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rpsl/exec/clock.hpp"
#include "rpsl/model/domain.hpp"
#include "rpsl/query/scene.hpp"

namespace rpsl::exec {

struct ProviderResponse {
  query::Scene scene;
  std::int64_t response_stamp_ms = 0;  // >= the request stamp
};

/// Answers a specification request with a scene. Stands in for the
/// perception architecture that receives a specification.
class SceneProvider {
 public:
  virtual ~SceneProvider() = default;
  virtual ProviderResponse respond(const std::string& spec, std::int64_t request_stamp_ms) = 0;
  /// False when the provider can only serve one request at a time.
  virtual bool concurrent_requests() const { return true; }
};

/// Serves fixed scenes after a fixed per-specification latency, measured on
/// the shared clock.
class LatencyProvider : public SceneProvider {
 public:
  explicit LatencyProvider(Clock& clock) : clock_(clock) {}

  void set_default(std::optional<query::Scene> scene, std::int64_t latency_ms);
  void set(const std::string& spec, std::optional<query::Scene> scene, std::optional<std::int64_t> latency_ms);
  void set_single_request(bool single) { single_request_ = single; }

  ProviderResponse respond(const std::string& spec, std::int64_t request_stamp_ms) override;
  bool concurrent_requests() const override { return !single_request_; }

  std::int64_t latency_for(const std::string& spec) const;

 private:
  struct Entry {
    std::optional<query::Scene> scene;
    std::optional<std::int64_t> latency_ms;
  };
  Clock& clock_;
  std::optional<query::Scene> default_scene_;
  std::int64_t default_latency_ms_ = 0;
  std::map<std::string, Entry> per_spec_;
  bool single_request_ = false;
};

/// Provider configuration document:
/// {"default_latency_ms": int, "default_scene": path?, "single_request": bool?,
///  "per_spec": {"name": {"latency_ms": int?, "scene": path?}}}
struct ProviderConfig {
  struct PerSpec {
    std::optional<std::int64_t> latency_ms;
    std::optional<std::filesystem::path> scene;
  };
  std::int64_t default_latency_ms = 0;
  std::optional<std::filesystem::path> default_scene;
  bool single_request = false;
  std::map<std::string, PerSpec> per_spec;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ProviderConfig parse_provider_config(std::string_view document);
ProviderConfig load_provider_config(const std::filesystem::path& path);

/// Loads every scene the config names (paths relative to the working
/// directory). Scene errors propagate as query::SceneError.
LatencyProvider make_provider(const ProviderConfig& config, const model::DomainRegistry& registry, Clock& clock);

}  // namespace rpsl::exec
