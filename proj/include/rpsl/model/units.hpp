#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rpsl::model {

enum class UnitKind { Length, Time, Dimensionless };

std::string_view to_string(UnitKind kind);

/// A unit is its kind plus an exact rational factor to the kind's base unit
/// (mm for length, ms for time, 1 for dimensionless).
struct Unit {
  UnitKind kind = UnitKind::Dimensionless;
  std::string_view symbol = "none";
  std::int64_t num = 1;
  std::int64_t den = 1;

  friend bool operator==(const Unit& a, const Unit& b) { return a.symbol == b.symbol; }
};

namespace units {
inline constexpr Unit mm{UnitKind::Length, "mm", 1, 1};
inline constexpr Unit cm{UnitKind::Length, "cm", 10, 1};
inline constexpr Unit m{UnitKind::Length, "m", 1000, 1};
inline constexpr Unit ms{UnitKind::Time, "ms", 1, 1};
inline constexpr Unit s{UnitKind::Time, "s", 1000, 1};
inline constexpr Unit min{UnitKind::Time, "min", 60000, 1};
inline constexpr Unit none{UnitKind::Dimensionless, "none", 1, 1};
}  // namespace units

/// Looks up `mm|cm|m|ms|s|min|none`.
std::optional<Unit> unit_from_symbol(std::string_view symbol);

Unit base_unit(UnitKind kind);

struct Quantity {
  double value = 0.0;
  Unit unit = units::none;
};

class UnitKindMismatch : public std::runtime_error {
 public:
  UnitKindMismatch(UnitKind from, UnitKind to);
  UnitKind from;
  UnitKind to;
};

/// Rescales `q` into `target`. Throws UnitKindMismatch across kinds.
Quantity convert_quantity(const Quantity& q, const Unit& target);

/// Value of `q` expressed in the base unit of its kind.
double to_base(const Quantity& q);

}  // namespace rpsl::model
