#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "macc/diagnostic.hpp"
#include "macc/model.hpp"

namespace macc {

enum class SourceKind { kArchitecture, kClassDiagram, kAppConfig, kLibProps };

struct SourceUnit {
  std::filesystem::path path;
  SourceKind kind = SourceKind::kArchitecture;
  std::string text;

  // .arc, .cd, .app, .lib
  static std::optional<SourceKind> kind_for(const std::filesystem::path& path);
};

// Reads a file into a SourceUnit. Throws Error(kIoError).
SourceUnit read_source(const std::filesystem::path& path);

template <typename T>
struct ParseResult {
  std::optional<T> value;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return value.has_value() && !has_errors(diagnostics); }
};

// Parsing stops at the first syntax error; the result then carries no value
// and exactly one error diagnostic.
ParseResult<ComponentType> parse_architecture(const SourceUnit& unit);
ParseResult<ClassDiagram> parse_class_diagram(const SourceUnit& unit);
ParseResult<ApplicationConfiguration> parse_app_config(const SourceUnit& unit);
ParseResult<CodeLibraryManifest> parse_lib_props(const SourceUnit& unit);

// Pretty printers. Output reparses to a structurally equal AST.
std::string print(const ComponentType& component);
std::string print(const ClassDiagram& diagram);
std::string print(const ApplicationConfiguration& config);
std::string print(const CodeLibraryManifest& library);

}  // namespace macc
