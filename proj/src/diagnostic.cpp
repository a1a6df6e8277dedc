#include "rpsl/diagnostic.hpp"

#include <algorithm>

namespace rpsl {

Span merge(const Span& a, const Span& b) {
  const Span& first = a.start <= b.start ? a : b;
  Span out = first;
  out.end = std::max(a.end, b.end);
  return out;
}

std::string_view to_string(Severity s) {
  switch (s) {
    case Severity::Error:
      return "error";
    case Severity::Warning:
      return "warning";
    case Severity::Note:
      return "note";
  }
  return "error";
}

Diagnostic make_error(std::string_view code, std::string message, Span span) {
  return Diagnostic{Severity::Error, std::string(code), std::move(message), span};
}

Diagnostic make_warning(std::string_view code, std::string message, Span span) {
  return Diagnostic{Severity::Warning, std::string(code), std::move(message), span};
}

bool has_errors(const std::vector<Diagnostic>& diags) {
  return count(diags, Severity::Error) > 0;
}

std::size_t count(const std::vector<Diagnostic>& diags, Severity s) {
  return static_cast<std::size_t>(
      std::count_if(diags.begin(), diags.end(), [s](const Diagnostic& d) { return d.severity == s; }));
}

void sort_diagnostics(std::vector<Diagnostic>& diags) {
  std::stable_sort(diags.begin(), diags.end(), [](const Diagnostic& a, const Diagnostic& b) {
    if (a.span.file != b.span.file) return a.span.file < b.span.file;
    return a.span.start < b.span.start;
  });
}

}  // namespace rpsl
