#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rpsl/model/domain.hpp"
#include "rpsl/model/region.hpp"

namespace rpsl::query {

/// Position in mm, orientation as a unit quaternion.
struct Pose {
  double x = 0, y = 0, z = 0;
  double qx = 0, qy = 0, qz = 0, qw = 1;

  friend bool operator==(const Pose&, const Pose&) = default;
};

inline constexpr double quaternion_norm_tolerance = 1e-6;

struct InstanceRecord {
  std::string id;
  model::Knoxel knoxel;
  std::optional<Pose> pose;
  std::optional<std::int64_t> stamp_ms;
};

/// One snapshot of perceived instances: the stand-in for what a perception
/// architecture reports.
struct Scene {
  std::vector<InstanceRecord> instances;
  std::int64_t stamp_ms = 0;
  std::string frame;
};

class SceneError : public std::runtime_error {
 public:
  enum class Kind { Schema, UnknownDimension, DuplicateInstanceId };
  SceneError(Kind kind, std::string path, const std::string& reason);
  Kind kind;
  std::string path;  // JSON path of the offending element, e.g. instances[1].values[0].dim
};

/// Parses and validates a scene document, converting every value to base
/// units. Dimensions are looked up in `registry`.
Scene load_scene(std::string_view document, const model::DomainRegistry& registry);
Scene load_scene_file(const std::filesystem::path& path, const model::DomainRegistry& registry);

}  // namespace rpsl::query
