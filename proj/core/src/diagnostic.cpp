#include "macc/diagnostic.hpp"

#include <algorithm>
#include <tuple>

namespace macc {

Diagnostic make_error(std::string code, SourceLocation location, std::string message) {
  return {Severity::kError, std::move(code), std::move(location), std::move(message)};
}

Diagnostic make_warning(std::string code, SourceLocation location, std::string message) {
  return {Severity::kWarning, std::move(code), std::move(location), std::move(message)};
}

std::string render(const Diagnostic& diagnostic) {
  std::string out = diagnostic.severity == Severity::kError ? "error " : "warning ";
  out += diagnostic.code;
  out += ' ';
  out += diagnostic.location.file;
  out += ':' + std::to_string(diagnostic.location.line);
  out += ':' + std::to_string(diagnostic.location.column);
  out += ' ';
  out += diagnostic.message;
  return out;
}

std::string render(std::span<const Diagnostic> diagnostics) {
  std::string out;
  for (const auto& diagnostic : diagnostics) {
    out += render(diagnostic);
    out += '\n';
  }
  return out;
}

namespace {

// CC10 sorts after CC9, not between CC1 and CC2.
std::tuple<std::string_view, int> code_key(const std::string& code) {
  std::size_t digits = code.size();
  while (digits > 0 && code[digits - 1] >= '0' && code[digits - 1] <= '9') --digits;
  if (digits == code.size()) return {code, -1};
  return {std::string_view(code).substr(0, digits), std::stoi(code.substr(digits))};
}

}  // namespace

void sort_diagnostics(std::vector<Diagnostic>& diagnostics) {
  std::stable_sort(diagnostics.begin(), diagnostics.end(),
                   [](const Diagnostic& a, const Diagnostic& b) {
                     return std::tuple(a.location.file, a.location.line, a.location.column,
                                       code_key(a.code)) <
                            std::tuple(b.location.file, b.location.line, b.location.column,
                                       code_key(b.code));
                   });
}

bool has_errors(std::span<const Diagnostic> diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::kError; });
}

}  // namespace macc
