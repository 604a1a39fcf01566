#include "macc/binding.hpp"

#include <algorithm>

#include "macc/error.hpp"

namespace macc {

namespace {

InstanceNode* find_mutable(InstanceNode& node, std::string_view qualified_name) {
  if (node.qualified_name == qualified_name) return &node;
  for (auto& child : node.children) {
    if (auto* found = find_mutable(child, qualified_name)) return found;
  }
  return nullptr;
}

void collect_rows(const InstanceNode& node, std::vector<BindingRow>& rows) {
  if (node.classification != Classification::kComposed) {
    rows.push_back({node.qualified_name, node.classification, node.binding});
  }
  for (const auto& child : node.children) collect_rows(child, rows);
}

}  // namespace

InstanceTree apply_binding(const InstanceTree& tree, const ApplicationConfiguration& config,
                           std::span<const CodeLibraryManifest> libraries) {
  InstanceTree bound = tree;
  for (const auto& binding : config.bindings) {
    auto* node = find_mutable(bound.root, binding.instance);
    if (!node) throw Error(ErrorCode::kUnresolvedInstance, "'" + binding.instance + "'");
    if (node->classification != Classification::kAbstract) {
      throw Error(ErrorCode::kNotAbstract, "'" + binding.instance + "' is " +
                                               std::string(to_string(node->classification)));
    }

    std::optional<ImplementationRef> ref;
    for (const auto& import : config.imports) {
      auto lib = std::find_if(libraries.begin(), libraries.end(),
                              [&](const CodeLibraryManifest& l) { return l.name == import.library; });
      if (lib == libraries.end()) continue;
      if (const auto* impl = lib->find(binding.implementation)) {
        ref = ImplementationRef{lib->name, impl->name, lib->rte, impl->kind};
        break;
      }
    }
    if (!ref) {
      throw Error(ErrorCode::kUnresolvedImplementation,
                  "'" + binding.implementation + "' for " + binding.instance);
    }
    node->binding = std::move(ref);
  }
  return bound;
}

std::string BindingRow::implementation_text() const {
  if (classification == Classification::kFullyModeled) return "generated";
  return implementation ? implementation->qualified() : "(unbound)";
}

std::vector<BindingRow> binding_table(const InstanceTree& tree) {
  std::vector<BindingRow> rows;
  collect_rows(tree.root, rows);
  return rows;
}

std::string render_binding_table(std::span<const BindingRow> rows) {
  const std::string kNameHeader = "QUALIFIED-NAME";
  std::size_t width = kNameHeader.size();
  for (const auto& row : rows) width = std::max(width, row.qualified_name.size());

  auto line = [&](const std::string& name, const std::string& impl) {
    return name + std::string(width - name.size() + 2, ' ') + impl + "\n";
  };
  std::string out = line(kNameHeader, "IMPLEMENTATION");
  for (const auto& row : rows) out += line(row.qualified_name, row.implementation_text());
  return out;
}

}  // namespace macc
