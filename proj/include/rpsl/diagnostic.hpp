#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rpsl {

using FileId = std::uint32_t;

/// Byte range into one source file, with the 1-based line/column of its start.
struct Span {
  FileId file = 0;
  std::size_t start = 0;
  std::size_t end = 0;
  std::uint32_t line = 1;
  std::uint32_t column = 1;

  friend bool operator==(const Span&, const Span&) = default;
};

/// Smallest span covering both arguments. Both must come from the same file.
Span merge(const Span& a, const Span& b);

enum class Severity { Error, Warning, Note };

std::string_view to_string(Severity s);

/// Stable diagnostic codes.
///
/// P0xx come from the parser, E0xx/W0xx from the analyzer. The numeric part
/// of a code never changes meaning once published.
namespace codes {
inline constexpr std::string_view LexicalError = "P001";
inline constexpr std::string_view UnexpectedToken = "P002";
inline constexpr std::string_view UnbalancedBraces = "P003";
inline constexpr std::string_view MalformedPoint = "P004";
inline constexpr std::string_view MalformedDeadline = "P005";
inline constexpr std::string_view StructureError = "P006";

inline constexpr std::string_view UnknownNamespace = "E001";
inline constexpr std::string_view UnknownConcept = "E002";
inline constexpr std::string_view UnknownDomain = "E003";
inline constexpr std::string_view UnknownDimension = "E004";
inline constexpr std::string_view UnitKindMismatch = "E005";
inline constexpr std::string_view MissingDimension = "E006";
inline constexpr std::string_view DuplicateName = "E007";
inline constexpr std::string_view UnknownSpecification = "E008";
inline constexpr std::string_view SimilarityOnConcept = "E009";
inline constexpr std::string_view UnknownMeasure = "E010";
inline constexpr std::string_view NonIntegerOrdinal = "E011";

inline constexpr std::string_view PrototypeOutsideRegion = "W001";
inline constexpr std::string_view UnsatisfiableCondition = "W002";
}  // namespace codes

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string code;
  std::string message;
  Span span;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

Diagnostic make_error(std::string_view code, std::string message, Span span);
Diagnostic make_warning(std::string_view code, std::string message, Span span);

bool has_errors(const std::vector<Diagnostic>& diags);
std::size_t count(const std::vector<Diagnostic>& diags, Severity s);

/// Orders by (file, start offset); stable for equal positions.
void sort_diagnostics(std::vector<Diagnostic>& diags);

}  // namespace rpsl
