#pragma once

// Concept regions and knoxels.
//
// A concept's Polytope lists one dimension per Point, so the region it
// describes is the interval hull of those samples: one closed interval per
// quality dimension. Membership is exact: a knoxel is inside iff every one
// of its coordinates lies in the matching interval.

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rpsl/model/domain.hpp"
#include "rpsl/model/interval.hpp"
#include "rpsl/model/units.hpp"

namespace rpsl::model {

/// A point in a conceptual space. Coordinates are stored in base units.
class Knoxel {
 public:
  /// Converts `q` to base units and stores it, replacing any previous value.
  void set(const DimensionKey& key, const Quantity& q);

  std::optional<double> get(const DimensionKey& key) const;
  bool has(const DimensionKey& key) const { return coords_.count(key) != 0; }
  std::size_t size() const { return coords_.size(); }

  const std::map<DimensionKey, Quantity>& coords() const { return coords_; }

  friend bool operator==(const Knoxel& a, const Knoxel& b);

 private:
  std::map<DimensionKey, Quantity> coords_;
};

struct ConceptRegion {
  std::map<DimensionKey, Interval> intervals;

  const Interval* find(const DimensionKey& key) const;
};

struct RegionPoint {
  DimensionKey dimension;
  Quantity value;
};

class RegionError : public std::runtime_error {
 public:
  enum class Kind { UnknownDimension, UnitKindMismatch, MissingDimension };
  RegionError(Kind kind, DimensionKey dimension, const std::string& what);
  Kind kind;
  DimensionKey dimension;
};

/// Interval hull of `points` over every dimension of `used_domains`.
///
/// Throws RegionError when a point names a dimension outside the used
/// domains, when a point's unit kind differs from its dimension's, or when a
/// used dimension receives no point at all.
ConceptRegion build_region(std::span<const Domain> used_domains, std::span<const RegionPoint> points);

/// True iff `k` has a coordinate for every region dimension and each lies in
/// its closed interval.
bool contains(const ConceptRegion& region, const Knoxel& k);

}  // namespace rpsl::model
