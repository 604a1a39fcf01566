#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "macc/instance.hpp"
#include "macc/model.hpp"

namespace macc {

// Returns a copy of `tree` in which every bound abstract instance carries the
// ImplementationRef its configuration names. Implementations are looked up in
// the libraries the configuration imports. Throws Error(kUnresolvedInstance)
// for a binding naming no instance, Error(kNotAbstract) for a binding on a
// composed or fully modeled instance, Error(kUnresolvedImplementation) when no
// imported library provides the implementation.
InstanceTree apply_binding(const InstanceTree& tree, const ApplicationConfiguration& config,
                           std::span<const CodeLibraryManifest> libraries);

struct BindingRow {
  std::string qualified_name;
  Classification classification = Classification::kAbstract;
  std::optional<ImplementationRef> implementation;

  // "generated", "(unbound)", or the library-qualified implementation.
  std::string implementation_text() const;
  friend bool operator==(const BindingRow&, const BindingRow&) = default;
};

// One row per atomic instance, pre-order.
std::vector<BindingRow> binding_table(const InstanceTree& tree);

// Two aligned columns, QUALIFIED-NAME and IMPLEMENTATION, with a header row.
std::string render_binding_table(std::span<const BindingRow> rows);

}  // namespace macc
