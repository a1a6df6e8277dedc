#include "rpsl/model/units.hpp"

#include <array>
#include <numeric>

namespace rpsl::model {

std::string_view to_string(UnitKind kind) {
  switch (kind) {
    case UnitKind::Length: return "length";
    case UnitKind::Time: return "time";
    case UnitKind::Dimensionless: return "dimensionless";
  }
  return "dimensionless";
}

std::optional<Unit> unit_from_symbol(std::string_view symbol) {
  static constexpr std::array table = {units::mm, units::cm, units::m, units::ms, units::s, units::min, units::none};
  for (const auto& u : table) {
    if (u.symbol == symbol) return u;
  }
  return std::nullopt;
}

Unit base_unit(UnitKind kind) {
  switch (kind) {
    case UnitKind::Length: return units::mm;
    case UnitKind::Time: return units::ms;
    case UnitKind::Dimensionless: return units::none;
  }
  return units::none;
}

UnitKindMismatch::UnitKindMismatch(UnitKind f, UnitKind t)
    : std::runtime_error("cannot convert " + std::string(to_string(f)) + " to " + std::string(to_string(t))),
      from(f),
      to(t) {}

Quantity convert_quantity(const Quantity& q, const Unit& target) {
  if (q.unit.kind != target.kind) throw UnitKindMismatch(q.unit.kind, target.kind);
  // value * (q.num / q.den) / (target.num / target.den), reduced first so the
  // common cases are a single exact multiplication or division.
  std::int64_t num = q.unit.num * target.den;
  std::int64_t den = q.unit.den * target.num;
  const std::int64_t g = std::gcd(num, den);
  num /= g;
  den /= g;
  double v = q.value;
  if (num != 1) v *= static_cast<double>(num);
  if (den != 1) v /= static_cast<double>(den);
  return Quantity{v, target};
}

double to_base(const Quantity& q) { return convert_quantity(q, base_unit(q.unit.kind)).value; }

}  // namespace rpsl::model
