#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rpsl/model/interval.hpp"
#include "rpsl/model/units.hpp"

namespace rpsl::model {

enum class Scale { Continuous, OrdinalInteger };

struct QualityDimension {
  std::string name;
  Scale scale = Scale::Continuous;
  UnitKind unit_kind = UnitKind::Dimensionless;
  /// Natural value range of the dimension (e.g. [0,255] for RGB channels),
  /// used as the normalization fallback for degenerate concept intervals.
  std::optional<Interval> canonical_range;
  /// Unit given in a `domain` declaration, if any.
  std::optional<Unit> declared_unit;

  /// Unit assumed for literals written without one.
  Unit default_unit() const { return declared_unit.value_or(base_unit(unit_kind)); }
};

struct Domain {
  std::string name;
  std::vector<QualityDimension> dimensions;

  const QualityDimension* find(std::string_view dimension) const;
};

/// Qualified dimension `Domain.Dimension`; the key of regions and knoxels.
struct DimensionKey {
  std::string domain;
  std::string dimension;

  std::string str() const { return domain + "." + dimension; }

  friend auto operator<=>(const DimensionKey&, const DimensionKey&) = default;
};

/// Parses `Domain.Dimension`; nullopt if the text has no single dot.
std::optional<DimensionKey> parse_dimension_key(std::string_view text);

class DomainRegistry {
 public:
  /// False (and no change) if a domain of that name already exists.
  bool add(Domain domain);

  const Domain* find(std::string_view name) const;
  const QualityDimension* find_dimension(const DimensionKey& key) const;

  /// Every `Domain.Dimension` key of `domain`, in declaration order.
  std::vector<DimensionKey> keys_of(const Domain& domain) const;

  auto begin() const { return domains_.begin(); }
  auto end() const { return domains_.end(); }
  std::size_t size() const { return domains_.size(); }

 private:
  std::map<std::string, Domain, std::less<>> domains_;
};

/// Size, RGB, Amount and Pose.
DomainRegistry builtin_registry();

}  // namespace rpsl::model
