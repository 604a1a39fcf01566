#include "macc/instance.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "macc/error.hpp"

namespace macc {

namespace {

const InstanceNode* find_in(const InstanceNode& node, std::string_view qualified_name) {
  if (node.qualified_name == qualified_name) return &node;
  // Only descend where the name can match.
  if (!qualified_name.starts_with(node.qualified_name) ||
      qualified_name.size() <= node.qualified_name.size() ||
      qualified_name[node.qualified_name.size()] != '.') {
    return nullptr;
  }
  for (const auto& child : node.children) {
    if (const auto* found = find_in(child, qualified_name)) return found;
  }
  return nullptr;
}

void visit_node(const InstanceNode& node, const std::function<void(const InstanceNode&)>& fn) {
  fn(node);
  for (const auto& child : node.children) visit_node(child, fn);
}

InstanceNode expand(const ArchitectureModel& model, const ComponentType& type,
                    std::string qualified_name, std::string instance_name,
                    std::vector<std::string>& stack) {
  if (std::find(stack.begin(), stack.end(), type.name) != stack.end()) {
    std::string chain;
    for (const auto& name : stack) chain += name + " -> ";
    throw Error(ErrorCode::kRecursiveComposition, chain + type.name);
  }
  stack.push_back(type.name);

  InstanceNode node;
  node.qualified_name = std::move(qualified_name);
  node.instance_name = std::move(instance_name);
  node.type_name = type.name;
  node.classification = classify(type);
  for (const auto& sub : type.subcomponents) {
    const auto* sub_type = model.find_component(sub.type_name);
    if (!sub_type) {
      throw Error(ErrorCode::kUnknownComponentType,
                  "'" + sub.type_name + "' (instance " + node.qualified_name + "." +
                      sub.instance_name + ")");
    }
    node.children.push_back(expand(model, *sub_type, node.qualified_name + "." +
                                                          sub.instance_name,
                                   sub.instance_name, stack));
  }

  stack.pop_back();
  return node;
}

}  // namespace

const InstanceNode* InstanceTree::find(std::string_view qualified_name) const {
  return find_in(root, qualified_name);
}

void InstanceTree::visit(const std::function<void(const InstanceNode&)>& visitor) const {
  visit_node(root, visitor);
}

std::size_t InstanceTree::size() const {
  std::size_t count = 0;
  visit([&](const InstanceNode&) { ++count; });
  return count;
}

InstanceTree instantiate(const ArchitectureModel& model, std::string_view root_type) {
  const auto* type = model.find_component(root_type);
  if (!type) throw Error(ErrorCode::kUnknownRootType, "'" + std::string(root_type) + "'");
  std::vector<std::string> stack;
  return InstanceTree{expand(model, *type, type->name, type->name, stack)};
}

namespace {

class Flattener {
 public:
  Flattener(const InstanceTree& tree, const ArchitectureModel& model)
      : tree_(tree), model_(model) {}

  FlatArchitecture run() {
    tree_.visit([&](const InstanceNode& node) {
      nodes_[node.qualified_name] = &node;
      if (node.classification == Classification::kComposed) collect_edges(node);
    });

    FlatArchitecture flat;
    tree_.visit([&](const InstanceNode& node) {
      if (node.classification == Classification::kComposed) return;
      flat.instances.push_back(
          {node.qualified_name, node.type_name, node.classification, node.binding});
      const auto* type = model_.find_component(node.type_name);
      for (const auto& port : type->ports) {
        if (port.direction != Direction::kIn) continue;
        Endpoint target{node.qualified_name, port.name};
        std::set<Endpoint> visited;
        trace_upstream(target, target, visited, flat.wires);
      }
    });
    std::sort(flat.wires.begin(), flat.wires.end());
    flat.wires.erase(std::unique(flat.wires.begin(), flat.wires.end()), flat.wires.end());
    return flat;
  }

 private:
  Endpoint resolve(const InstanceNode& owner, const PortRef& ref) const {
    if (ref.instance) return {owner.qualified_name + "." + *ref.instance, ref.port};
    return {owner.qualified_name, ref.port};
  }

  void collect_edges(const InstanceNode& node) {
    const auto* type = model_.find_component(node.type_name);
    for (const auto& connector : type->connectors) {
      Endpoint source = resolve(node, connector.source);
      for (const auto& target : connector.targets) {
        incoming_[resolve(node, target)].push_back(source);
      }
    }
  }

  bool is_atomic(const std::string& qualified_name) const {
    auto it = nodes_.find(qualified_name);
    return it != nodes_.end() && it->second->classification != Classification::kComposed;
  }

  void trace_upstream(const Endpoint& at, const Endpoint& sink, std::set<Endpoint>& visited,
                      std::vector<Wire>& wires) const {
    if (!visited.insert(at).second) return;
    auto it = incoming_.find(at);
    if (it == incoming_.end() || it->second.empty()) {
      // Undriven atomic in-ports and root in-ports simply carry no messages.
      if (at == sink || at.instance == tree_.root.qualified_name) return;
      throw Error(ErrorCode::kDanglingBoundary,
                  "boundary port " + at.to_string() + " on the path to " + sink.to_string() +
                      " has no driver");
    }
    for (const auto& source : it->second) {
      if (is_atomic(source.instance)) {
        wires.push_back({source, sink});
      } else {
        trace_upstream(source, sink, visited, wires);
      }
    }
  }

  const InstanceTree& tree_;
  const ArchitectureModel& model_;
  std::map<std::string, const InstanceNode*> nodes_;
  std::map<Endpoint, std::vector<Endpoint>> incoming_;
};

}  // namespace

FlatArchitecture flatten(const InstanceTree& tree, const ArchitectureModel& model) {
  return Flattener(tree, model).run();
}

}  // namespace macc
