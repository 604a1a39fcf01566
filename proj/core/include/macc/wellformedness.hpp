#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "macc/codegen.hpp"
#include "macc/diagnostic.hpp"
#include "macc/instance.hpp"
#include "macc/model.hpp"

namespace macc {

struct CheckReport {
  std::vector<Diagnostic> diagnostics;  // sorted by (file, line, column, code)

  bool ok() const { return !has_errors(diagnostics); }
};

// Context conditions
//   CC1  type names unique and disjoint from builtins; type references resolve
//   CC2  port and instance names unique per component
//   CC3  connector endpoints exist with legal directions
//   CC4  connector endpoint types identical
//   CC5  exactly one driver per subcomponent in-port and composed out-port
//        (unconnected subcomponent out-ports are warnings)
//   CC6  automaton references, directions, and literal types
//   CC7  composition structure: no automaton or connectors where they do not
//        belong, no recursive composition
//   CC12 class-diagram-internal uniqueness
// Every component type of the model is checked, reachable from `root_type` or
// not. An unknown root is reported as CC1.
CheckReport check_architecture(const ArchitectureModel& model, std::string_view root_type);

// CC6 for one component. Empty report when the component has no automaton.
CheckReport check_automaton(const ComponentType& component, const ArchitectureModel& model);

struct BindingCheckOptions {
  // When false the generator clause is ignored (CC10 then only requires the
  // bound libraries to agree on one RTE).
  bool check_generators = true;
};

// Design-time binding checks
//   CC8  every abstract instance is bound
//   CC9  the implementation exists in an imported library and implements the
//        instance's component type
//   CC10 selected generators and bound libraries share one RTE; the generator
//        set covers the structure, behavior and datatype roles
//   CC11 only abstract instances are bound
CheckReport check_binding(const InstanceTree& tree, const ApplicationConfiguration& config,
                          std::span<const CodeLibraryManifest> libraries,
                          std::span<const GeneratorDescriptor> generators,
                          BindingCheckOptions options = {});

}  // namespace macc
