#include "macc/workspace.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <system_error>

#include "macc/error.hpp"
#include "macc/parser.hpp"

namespace macc {

namespace fs = std::filesystem;

namespace {

std::vector<fs::path> list_files(const fs::path& dir, bool recursive,
                                 std::initializer_list<std::string_view> extensions) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw Error(ErrorCode::kIoError, "not a readable directory: " + dir.string());
  }
  std::vector<fs::path> files;
  auto keep = [&](const fs::directory_entry& entry) {
    if (!entry.is_regular_file()) return;
    auto ext = entry.path().extension().string();
    if (std::find(extensions.begin(), extensions.end(), ext) != extensions.end()) {
      files.push_back(entry.path());
    }
  };
  if (recursive) {
    fs::recursive_directory_iterator it(dir, ec), end;
    for (; !ec && it != end; it.increment(ec)) keep(*it);
  } else {
    fs::directory_iterator it(dir, ec), end;
    for (; !ec && it != end; it.increment(ec)) keep(*it);
  }
  if (ec) throw Error(ErrorCode::kIoError, "cannot list " + dir.string() + ": " + ec.message());
  std::sort(files.begin(), files.end());
  return files;
}

class Loader {
 public:
  explicit Loader(std::span<const fs::path> model_paths) : model_paths_(model_paths) {}

  void load_models(Workspace& ws) {
    for (const auto& dir : model_paths_) load_directory(dir, ws);

    std::set<std::string> requested;
    while (!pending_imports_.empty()) {
      Import import = std::move(pending_imports_.front());
      pending_imports_.pop_front();
      if (!requested.insert(import.library).second) continue;
      auto dir = find_library_dir(import.library);
      if (!dir) {
        ws.diagnostics.push_back(make_error("IMPORT", import.origin.where,
                                            "model library '" + import.library +
                                                "' not found in any model path"));
        // Later imports of the same missing library are reported too.
        requested.erase(import.library);
        continue;
      }
      load_directory(*dir, ws);
    }
  }

 private:
  std::optional<fs::path> find_library_dir(const std::string& name) const {
    for (const auto& root : model_paths_) {
      std::error_code ec;
      auto candidate = root / name;
      if (fs::is_directory(candidate, ec)) return candidate;
    }
    return std::nullopt;
  }

  void load_directory(const fs::path& dir, Workspace& ws) {
    auto key = dir.lexically_normal().generic_string();
    if (!loaded_dirs_.insert(key).second) return;
    for (const auto& path : list_files(dir, /*recursive=*/false, {".arc", ".cd"})) {
      SourceUnit unit;
      try {
        unit = read_source(path.lexically_normal());
      } catch (const Error& e) {
        ws.diagnostics.push_back(make_error("IO", {path.generic_string(), 1, 1}, e.what()));
        continue;
      }
      if (unit.kind == SourceKind::kArchitecture) {
        auto result = parse_architecture(unit);
        append(ws.diagnostics, result.diagnostics);
        if (result.value) {
          for (const auto& import : result.value->imports) pending_imports_.push_back(import);
          ws.model.components.push_back(std::move(*result.value));
        }
      } else {
        auto result = parse_class_diagram(unit);
        append(ws.diagnostics, result.diagnostics);
        if (result.value) ws.model.class_diagrams.push_back(std::move(*result.value));
      }
    }
  }

  static void append(std::vector<Diagnostic>& into, const std::vector<Diagnostic>& from) {
    into.insert(into.end(), from.begin(), from.end());
  }

  std::span<const fs::path> model_paths_;
  std::set<std::string> loaded_dirs_;
  std::deque<Import> pending_imports_;
};

}  // namespace

Workspace load_workspace(std::span<const fs::path> model_paths,
                         std::span<const fs::path> library_paths) {
  Workspace ws;
  Loader(model_paths).load_models(ws);

  for (const auto& dir : library_paths) {
    for (const auto& path : list_files(dir, /*recursive=*/true, {".lib"})) {
      try {
        auto result = parse_lib_props(read_source(path.lexically_normal()));
        ws.diagnostics.insert(ws.diagnostics.end(), result.diagnostics.begin(),
                              result.diagnostics.end());
        if (result.value) ws.libraries.push_back(std::move(*result.value));
      } catch (const Error& e) {
        ws.diagnostics.push_back(make_error("IO", {path.generic_string(), 1, 1}, e.what()));
      }
    }
  }
  sort_diagnostics(ws.diagnostics);
  return ws;
}

}  // namespace macc
