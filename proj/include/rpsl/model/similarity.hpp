#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "rpsl/model/region.hpp"

namespace rpsl::model {

/// Absolute tolerance for `==` / `!=` on similarity values (normalized space).
inline constexpr double similarity_epsilon = 1e-9;

/// Names accepted by `Similarity(...)`.
std::span<const std::string_view> similarity_measures();
bool is_known_measure(std::string_view name);

/// Min-max normalization against the concept interval. A degenerate interval
/// falls back to the canonical range when one exists, else the raw offset
/// `v - lo` is returned. The result is not clamped.
double normalize_value(double v, const Interval& interval, const std::optional<Interval>& canonical = std::nullopt);

/// One axis of a distance computation.
struct DistanceAxis {
  DimensionKey key;
  Interval interval;                       // concept interval (normalization)
  std::optional<Interval> canonical;       // fallback for degenerate intervals
};

/// Width a coordinate difference is divided by when normalizing on `axis`.
double normalization_width(const DistanceAxis& axis);

class MissingCoordinate : public std::runtime_error {
 public:
  MissingCoordinate(char which, DimensionKey dimension);
  char which;  // 'a' or 'b'
  DimensionKey dimension;
};

/// Euclidean distance over `axes`; with `normalized`, each per-axis
/// difference is divided by normalization_width(axis) first.
/// Throws MissingCoordinate if either knoxel lacks an axis.
double euclidean_distance(const Knoxel& a, const Knoxel& b, std::span<const DistanceAxis> axes, bool normalized);

}  // namespace rpsl::model
