#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "macc/model.hpp"

namespace macc {

// The implementation an abstract instance is bound to.
struct ImplementationRef {
  std::string library;
  std::string implementation;
  std::string rte;
  std::optional<StubKind> kind;

  // `Library.Implementation`
  std::string qualified() const { return library + "." + implementation; }
  friend bool operator==(const ImplementationRef&, const ImplementationRef&) = default;
};

struct InstanceNode {
  std::string qualified_name;
  std::string instance_name;  // equals qualified_name for the root
  std::string type_name;
  Classification classification = Classification::kAbstract;
  std::vector<InstanceNode> children;
  std::optional<ImplementationRef> binding;

  friend bool operator==(const InstanceNode&, const InstanceNode&) = default;
};

struct InstanceTree {
  InstanceNode root;

  const InstanceNode* find(std::string_view qualified_name) const;
  // Pre-order, children in declaration order.
  void visit(const std::function<void(const InstanceNode&)>& visitor) const;
  std::size_t size() const;

  friend bool operator==(const InstanceTree&, const InstanceTree&) = default;
};

// Expands `root_type` transitively. Throws Error with kUnknownRootType,
// kUnknownComponentType, or kRecursiveComposition.
InstanceTree instantiate(const ArchitectureModel& model, std::string_view root_type);

struct Endpoint {
  std::string instance;  // qualified instance name
  std::string port;

  std::string to_string() const { return instance + "." + port; }
  friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

// A direct connection between two atomic instances.
struct Wire {
  Endpoint source;
  Endpoint target;

  friend auto operator<=>(const Wire&, const Wire&) = default;
  friend bool operator==(const Wire&, const Wire&) = default;
};

struct AtomicInstance {
  std::string qualified_name;
  std::string type_name;
  Classification classification = Classification::kAbstract;
  std::optional<ImplementationRef> binding;

  friend bool operator==(const AtomicInstance&, const AtomicInstance&) = default;
};

struct FlatArchitecture {
  std::vector<AtomicInstance> instances;  // pre-order of the instance tree
  std::vector<Wire> wires;                // sorted

  friend bool operator==(const FlatArchitecture&, const FlatArchitecture&) = default;
};

// Shorts every composed boundary port so that each connector chain becomes
// one atomic-to-atomic wire. Ports of the root are the system boundary: an
// undriven root in-port yields no wire. A chain that stops at a non-root
// composed port with no driver throws Error(kDanglingBoundary).
FlatArchitecture flatten(const InstanceTree& tree, const ArchitectureModel& model);

}  // namespace macc
