#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "macc/instance.hpp"
#include "macc/model.hpp"

namespace macc {

enum class GeneratorRole { kStructure, kBehavior, kDatatype };

std::string_view to_string(GeneratorRole role);

struct GeneratorDescriptor {
  std::string name;
  std::string rte;
  GeneratorRole role = GeneratorRole::kStructure;

  friend bool operator==(const GeneratorDescriptor&, const GeneratorDescriptor&) = default;
};

// Built-in generators: one structure/behavior/datatype triple per target RTE
// (rte-a and rte-b).
std::span<const GeneratorDescriptor> registry();
const GeneratorDescriptor* find_generator(std::string_view name);

// Target-side spelling of a builtin type. Throws Error(kRteMismatch) for an
// RTE without a mapping table.
std::string_view builtin_mapping(std::string_view rte, Builtin builtin);

struct GeneratedFile {
  std::string path;  // relative to the output directory, '/'-separated
  std::string text;

  friend bool operator==(const GeneratedFile&, const GeneratedFile&) = default;
};

struct GeneratedFileSet {
  std::vector<GeneratedFile> files;  // sorted by path

  friend bool operator==(const GeneratedFileSet&, const GeneratedFileSet&) = default;
};

// Interface section for every type; a FACTORY section for composed types that
// occur in `bound_tree`. Throws Error(kUnboundInstance) for an abstract child
// without a binding, Error(kAmbiguousFactory) when two occurrences of the same
// composed type would need different factories.
std::string emit_structure(const ComponentType& component, const InstanceTree& bound_tree,
                           const GeneratorDescriptor& generator);

// Throws Error(kNotFullyModeled) unless `component` is atomic with an automaton.
std::string emit_behavior(const ComponentType& component, const GeneratorDescriptor& generator);

// One file per class diagram, at `<rte>/types/<CDName>.gen`.
std::vector<GeneratedFile> emit_datatypes(std::span<const ClassDiagram> diagrams,
                                          const GeneratorDescriptor& generator);

// Resolves the configured generators and runs datatype, structure, then
// behavior generation. Structure files cover every component type of the
// model; behavior files cover atomic fully modeled types. Pure.
// Throws Error with kUnknownGenerator, kRoleMissing, or kDuplicateRole.
GeneratedFileSet generate(const InstanceTree& bound_tree, const ArchitectureModel& model,
                          const ApplicationConfiguration& config);

// Writes every file under `out_dir`. Throws Error(kWriteError).
void write_file_set(const GeneratedFileSet& files, const std::filesystem::path& out_dir);

// generate() followed by write_file_set().
GeneratedFileSet orchestrate(const InstanceTree& bound_tree, const ArchitectureModel& model,
                             const ApplicationConfiguration& config,
                             const std::filesystem::path& out_dir);

}  // namespace macc
