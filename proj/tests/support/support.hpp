#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "macc/instance.hpp"
#include "macc/model.hpp"
#include "macc/workspace.hpp"

namespace macc::test {

// Tests run from the source directory; fixture paths are relative to it.
inline const std::filesystem::path kFixtures = "fixtures";

std::string read_text(const std::filesystem::path& path);

Workspace load(std::vector<std::filesystem::path> models,
               std::vector<std::filesystem::path> libs = {});
Workspace load_bumperbot();
Workspace load_wrapped_bumperbot();

ApplicationConfiguration load_app(const std::filesystem::path& path);

// Parse source text; throw std::runtime_error with rendered diagnostics on
// any error. The file name is derived from the declared name.
ComponentType arc(std::string_view text);
ClassDiagram cd(std::string_view text);
ApplicationConfiguration app(std::string_view text);
CodeLibraryManifest lib(std::string_view text);

ArchitectureModel model_of(std::vector<std::string_view> arcs, std::vector<std::string_view> cds = {});

// instantiate + check_binding + apply_binding; throws std::runtime_error
// when the binding check reports errors.
InstanceTree bind(const ArchitectureModel& model, std::string_view root,
                  const ApplicationConfiguration& config,
                  const std::vector<CodeLibraryManifest>& libraries, bool check_generators = true);

// A deterministic scratch directory under the system temp directory.
std::filesystem::path scratch_dir(std::string_view name);

// Randomly generated, well-formed architectures over one Integer signal.
// The instance tree has at most `max_depth` levels (leaves included) and at
// most `max_children` subcomponents per node; every abstract instance is bound in `config`.
struct RandomSystem {
  ArchitectureModel model;
  std::string root;
  ApplicationConfiguration config;
  std::vector<CodeLibraryManifest> libraries;
};

RandomSystem random_system(std::uint32_t seed, int max_depth = 4, int max_children = 5);

}  // namespace macc::test
