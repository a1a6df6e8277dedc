#include "rpsl/model/domain.hpp"

namespace rpsl::model {

const QualityDimension* Domain::find(std::string_view dimension) const {
  for (const auto& d : dimensions) {
    if (d.name == dimension) return &d;
  }
  return nullptr;
}

std::optional<DimensionKey> parse_dimension_key(std::string_view text) {
  const auto dot = text.find('.');
  if (dot == std::string_view::npos || dot == 0 || dot + 1 == text.size()) return std::nullopt;
  if (text.find('.', dot + 1) != std::string_view::npos) return std::nullopt;
  return DimensionKey{std::string(text.substr(0, dot)), std::string(text.substr(dot + 1))};
}

bool DomainRegistry::add(Domain domain) {
  const std::string name = domain.name;
  return domains_.emplace(name, std::move(domain)).second;
}

const Domain* DomainRegistry::find(std::string_view name) const {
  const auto it = domains_.find(name);
  return it == domains_.end() ? nullptr : &it->second;
}

const QualityDimension* DomainRegistry::find_dimension(const DimensionKey& key) const {
  const Domain* d = find(key.domain);
  return d ? d->find(key.dimension) : nullptr;
}

std::vector<DimensionKey> DomainRegistry::keys_of(const Domain& domain) const {
  std::vector<DimensionKey> out;
  out.reserve(domain.dimensions.size());
  for (const auto& dim : domain.dimensions) out.push_back(DimensionKey{domain.name, dim.name});
  return out;
}

DomainRegistry builtin_registry() {
  DomainRegistry reg;
  auto continuous = [](std::string name, UnitKind kind) {
    return QualityDimension{std::move(name), Scale::Continuous, kind, std::nullopt, std::nullopt};
  };

  reg.add(Domain{"Size",
                 {continuous("Height", UnitKind::Length), continuous("Width", UnitKind::Length),
                  continuous("Length", UnitKind::Length)}});

  const Interval channel{0.0, 255.0};
  reg.add(Domain{"RGB",
                 {QualityDimension{"Red", Scale::OrdinalInteger, UnitKind::Dimensionless, channel, std::nullopt},
                  QualityDimension{"Green", Scale::OrdinalInteger, UnitKind::Dimensionless, channel, std::nullopt},
                  QualityDimension{"Blue", Scale::OrdinalInteger, UnitKind::Dimensionless, channel, std::nullopt}}});

  reg.add(Domain{"Amount", {QualityDimension{"Count", Scale::OrdinalInteger, UnitKind::Dimensionless, std::nullopt, std::nullopt}}});

  reg.add(Domain{"Pose",
                 {continuous("X", UnitKind::Length), continuous("Y", UnitKind::Length),
                  continuous("Z", UnitKind::Length), continuous("QX", UnitKind::Dimensionless),
                  continuous("QY", UnitKind::Dimensionless), continuous("QZ", UnitKind::Dimensionless),
                  continuous("QW", UnitKind::Dimensionless)}});
  return reg;
}

}  // namespace rpsl::model
