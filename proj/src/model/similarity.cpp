#include "rpsl/model/similarity.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace rpsl::model {

namespace {
constexpr std::array<std::string_view, 1> measures = {"EuclideanDistance"};
}

std::span<const std::string_view> similarity_measures() { return measures; }

bool is_known_measure(std::string_view name) {
  return std::find(measures.begin(), measures.end(), name) != measures.end();
}

double normalize_value(double v, const Interval& interval, const std::optional<Interval>& canonical) {
  if (!interval.degenerate()) return (v - interval.lo) / interval.width();
  if (canonical && !canonical->degenerate()) return (v - canonical->lo) / canonical->width();
  return v - interval.lo;
}

double normalization_width(const DistanceAxis& axis) {
  if (!axis.interval.degenerate()) return axis.interval.width();
  if (axis.canonical && !axis.canonical->degenerate()) return axis.canonical->width();
  return 1.0;
}

MissingCoordinate::MissingCoordinate(char w, DimensionKey dim)
    : std::runtime_error(std::string("knoxel ") + w + " has no value for " + dim.str()),
      which(w),
      dimension(std::move(dim)) {}

double euclidean_distance(const Knoxel& a, const Knoxel& b, std::span<const DistanceAxis> axes, bool normalized) {
  double sum = 0.0;
  for (const auto& axis : axes) {
    const auto va = a.get(axis.key);
    if (!va) throw MissingCoordinate('a', axis.key);
    const auto vb = b.get(axis.key);
    if (!vb) throw MissingCoordinate('b', axis.key);
    double diff = *va - *vb;
    if (normalized) diff /= normalization_width(axis);
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

}  // namespace rpsl::model
