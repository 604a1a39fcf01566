#pragma once

#include <span>
#include <string>
#include <vector>

namespace macc {

struct SourceLocation {
  std::string file;
  int line = 0;
  int column = 0;

  friend bool operator==(const SourceLocation&, const SourceLocation&) = default;
};

enum class Severity { kError, kWarning };

// Codes are either a context-condition id (CC1..CC12) or a front-end code
// (SYNTAX, NAME, DUPLICATE, UNSUPPORTED, IMPORT, IO).
struct Diagnostic {
  Severity severity = Severity::kError;
  std::string code;
  SourceLocation location;
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

Diagnostic make_error(std::string code, SourceLocation location, std::string message);
Diagnostic make_warning(std::string code, SourceLocation location, std::string message);

// `severity CODE file:line:col message`
std::string render(const Diagnostic& diagnostic);
// One rendered diagnostic per line, each terminated by '\n'.
std::string render(std::span<const Diagnostic> diagnostics);

// Orders by (file, line, column, code); stable for equal keys.
void sort_diagnostics(std::vector<Diagnostic>& diagnostics);

bool has_errors(std::span<const Diagnostic> diagnostics);

}  // namespace macc
