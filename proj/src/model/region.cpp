#include "rpsl/model/region.hpp"

#include <algorithm>

namespace rpsl::model {

void Knoxel::set(const DimensionKey& key, const Quantity& q) {
  const Unit base = base_unit(q.unit.kind);
  coords_[key] = convert_quantity(q, base);
}

std::optional<double> Knoxel::get(const DimensionKey& key) const {
  const auto it = coords_.find(key);
  if (it == coords_.end()) return std::nullopt;
  return it->second.value;
}

bool operator==(const Knoxel& a, const Knoxel& b) {
  return std::equal(a.coords_.begin(), a.coords_.end(), b.coords_.begin(), b.coords_.end(),
                    [](const auto& x, const auto& y) {
                      return x.first == y.first && x.second.value == y.second.value &&
                             x.second.unit == y.second.unit;
                    });
}

const Interval* ConceptRegion::find(const DimensionKey& key) const {
  const auto it = intervals.find(key);
  return it == intervals.end() ? nullptr : &it->second;
}

RegionError::RegionError(Kind k, DimensionKey dim, const std::string& what)
    : std::runtime_error(what), kind(k), dimension(std::move(dim)) {}

ConceptRegion build_region(std::span<const Domain> used_domains, std::span<const RegionPoint> points) {
  auto find_dimension = [&](const DimensionKey& key) -> const QualityDimension* {
    for (const auto& d : used_domains) {
      if (d.name == key.domain) return d.find(key.dimension);
    }
    return nullptr;
  };

  ConceptRegion region;
  for (const auto& p : points) {
    const QualityDimension* dim = find_dimension(p.dimension);
    if (!dim) {
      throw RegionError(RegionError::Kind::UnknownDimension, p.dimension,
                        "unknown dimension " + p.dimension.str());
    }
    if (dim->unit_kind != p.value.unit.kind) {
      throw RegionError(RegionError::Kind::UnitKindMismatch, p.dimension,
                        p.dimension.str() + " expects a " + std::string(to_string(dim->unit_kind)) +
                            " value, got " + std::string(to_string(p.value.unit.kind)));
    }
    const double v = to_base(p.value);
    auto [it, inserted] = region.intervals.try_emplace(p.dimension, Interval{v, v});
    if (!inserted) {
      it->second.lo = std::min(it->second.lo, v);
      it->second.hi = std::max(it->second.hi, v);
    }
  }
  for (const auto& d : used_domains) {
    for (const auto& dim : d.dimensions) {
      DimensionKey key{d.name, dim.name};
      if (!region.intervals.count(key)) {
        throw RegionError(RegionError::Kind::MissingDimension, key, "no Point covers dimension " + key.str());
      }
    }
  }
  return region;
}

bool contains(const ConceptRegion& region, const Knoxel& k) {
  for (const auto& [key, interval] : region.intervals) {
    const auto v = k.get(key);
    if (!v || !interval.contains(*v)) return false;
  }
  return true;
}

}  // namespace rpsl::model
