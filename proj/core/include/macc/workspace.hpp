#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include "macc/diagnostic.hpp"
#include "macc/model.hpp"

namespace macc {

struct Workspace {
  ArchitectureModel model;
  std::vector<CodeLibraryManifest> libraries;
  std::vector<Diagnostic> diagnostics;
};

// Loads the top-level .arc/.cd files of every model path, then every model
// library named by an `import Lib.*;` line (a subdirectory `Lib` of some model
// path), and every .lib file below the library paths. Files are visited in
// lexicographic order. A file that fails to parse contributes a diagnostic
// and nothing else. Throws Error(kIoError) when a directory is unreadable.
Workspace load_workspace(std::span<const std::filesystem::path> model_paths,
                         std::span<const std::filesystem::path> library_paths);

}  // namespace macc
