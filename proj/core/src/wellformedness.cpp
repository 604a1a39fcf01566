#include "macc/wellformedness.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>

namespace macc {

namespace {

std::string quote(std::string_view text) { return "'" + std::string(text) + "'"; }

bool location_less(const SourceLocation& a, const SourceLocation& b) {
  return std::tie(a.file, a.line, a.column) < std::tie(b.file, b.line, b.column);
}

class ArchitectureChecker {
 public:
  explicit ArchitectureChecker(const ArchitectureModel& model) : model_(model) {}

  std::vector<Diagnostic> run(std::string_view root_type) {
    check_type_names();
    for (std::size_t i = 0; i < model_.class_diagrams.size(); ++i) {
      check_class_diagram(model_.class_diagrams[i]);
    }
    for (const auto& component : model_.components) {
      check_references(component);
      check_unique_members(component);
      check_structure(component);
      if (component.is_atomic()) continue;
      check_connectors(component);
    }
    check_recursion();
    for (const auto& component : model_.components) {
      auto report = check_automaton(component, model_);
      diagnostics_.insert(diagnostics_.end(), report.diagnostics.begin(),
                          report.diagnostics.end());
    }
    if (!model_.find_component(root_type)) {
      error("CC1", {"<root>", 1, 1}, "unknown root component type " + quote(root_type));
    }
    return std::move(diagnostics_);
  }

 private:
  void error(const char* code, const SourceLocation& where, std::string message) {
    diagnostics_.push_back(make_error(code, where, std::move(message)));
  }
  void warning(const char* code, const SourceLocation& where, std::string message) {
    diagnostics_.push_back(make_warning(code, where, std::move(message)));
  }

  // CC1: names across the workspace.
  void check_type_names() {
    struct Decl {
      std::string name;
      SourceLocation where;
      int diagram;  // -1 for component types
    };
    std::vector<Decl> decls;
    for (const auto& component : model_.components) {
      decls.push_back({component.name, component.origin.where, -1});
    }
    for (std::size_t i = 0; i < model_.class_diagrams.size(); ++i) {
      const auto& cd = model_.class_diagrams[i];
      for (const auto& e : cd.enums) decls.push_back({e.name, e.origin.where, int(i)});
      for (const auto& r : cd.records) decls.push_back({r.name, r.origin.where, int(i)});
    }
    std::stable_sort(decls.begin(), decls.end(), [](const Decl& a, const Decl& b) {
      return location_less(a.where, b.where);
    });

    std::map<std::string, const Decl*> first;
    for (const auto& decl : decls) {
      if (builtin_from_name(decl.name)) {
        error("CC1", decl.where, "type name " + quote(decl.name) + " collides with a builtin type");
        continue;
      }
      auto [it, inserted] = first.emplace(decl.name, &decl);
      if (inserted) continue;
      // Collisions inside one class diagram are CC12.
      if (decl.diagram >= 0 && decl.diagram == it->second->diagram) continue;
      error("CC1", decl.where, "type " + quote(decl.name) + " is already declared");
    }

    std::map<std::string, SourceLocation> diagrams;
    for (const auto& cd : model_.class_diagrams) {
      if (!diagrams.emplace(cd.name, cd.origin.where).second) {
        error("CC1", cd.origin.where, "class diagram " + quote(cd.name) + " is already declared");
      }
    }
  }

  // CC12
  void check_class_diagram(const ClassDiagram& cd) {
    std::set<std::string> names;
    std::vector<std::pair<std::string, SourceLocation>> decls;
    for (const auto& e : cd.enums) decls.emplace_back(e.name, e.origin.where);
    for (const auto& r : cd.records) decls.emplace_back(r.name, r.origin.where);
    std::stable_sort(decls.begin(), decls.end(),
                     [](const auto& a, const auto& b) { return location_less(a.second, b.second); });
    for (const auto& [name, where] : decls) {
      if (!names.insert(name).second) {
        error("CC12", where, "type " + quote(name) + " is declared twice in class diagram " +
                                 quote(cd.name));
      }
    }
    for (const auto& e : cd.enums) {
      std::set<std::string> literals;
      for (std::size_t i = 0; i < e.literals.size(); ++i) {
        if (!literals.insert(e.literals[i]).second) {
          auto where = i < e.literal_origins.size() ? e.literal_origins[i].where : e.origin.where;
          error("CC12", where,
                "duplicate literal " + quote(e.literals[i]) + " in enum " + quote(e.name));
        }
      }
    }
    for (const auto& r : cd.records) {
      std::set<std::string> fields;
      for (const auto& field : r.fields) {
        if (!fields.insert(field.name).second) {
          error("CC12", field.origin.where,
                "duplicate field " + quote(field.name) + " in class " + quote(r.name));
        }
        if (!model_.resolve_type(field.type_name)) {
          error("CC1", field.origin.where, "unknown type " + quote(field.type_name));
        }
      }
    }
  }

  // CC1: references from components.
  void check_references(const ComponentType& component) {
    for (const auto& port : component.ports) {
      if (!model_.resolve_type(port.type_name)) {
        error("CC1", port.origin.where, "unknown type " + quote(port.type_name));
      }
    }
    for (const auto& sub : component.subcomponents) {
      if (!model_.find_component(sub.type_name)) {
        error("CC1", sub.origin.where, "unknown component type " + quote(sub.type_name));
      }
    }
  }

  // CC2
  void check_unique_members(const ComponentType& component) {
    std::set<std::string> ports;
    for (const auto& port : component.ports) {
      if (!ports.insert(port.name).second) {
        error("CC2", port.origin.where,
              "duplicate port " + quote(port.name) + " in component " + quote(component.name));
      }
    }
    std::set<std::string> instances;
    for (const auto& sub : component.subcomponents) {
      if (!instances.insert(sub.instance_name).second) {
        error("CC2", sub.origin.where,
              "duplicate instance " + quote(sub.instance_name) + " in component " +
                  quote(component.name));
      }
    }
  }

  // CC7 (local part)
  void check_structure(const ComponentType& component) {
    if (!component.is_atomic() && component.behavior) {
      error("CC7", component.behavior->origin.where,
            "composed component " + quote(component.name) + " must not have an automaton");
    }
    if (component.is_atomic()) {
      for (const auto& connector : component.connectors) {
        error("CC7", connector.origin.where,
              "atomic component " + quote(component.name) + " must not declare connectors");
      }
    }
  }

  struct EndpointInfo {
    const Port* port = nullptr;
    bool own = false;
  };

  // Returns an empty port when the reference is invalid (after reporting
  // CC3) or unresolvable because of an already reported CC1.
  EndpointInfo resolve(const ComponentType& component, const PortRef& ref, bool as_source) {
    const char* role = as_source ? "source" : "target";
    if (ref.instance) {
      const auto* sub = component.find_subcomponent(*ref.instance);
      if (!sub) {
        error("CC3", ref.origin.where,
              std::string("connector ") + role + " refers to unknown subcomponent " +
                  quote(*ref.instance));
        return {};
      }
      const auto* type = model_.find_component(sub->type_name);
      if (!type) return {};
      const auto* port = type->find_port(ref.port);
      if (!port) {
        error("CC3", ref.origin.where,
              std::string("connector ") + role + " refers to unknown port " +
                  quote(ref.to_string()));
        return {};
      }
      Direction wanted = as_source ? Direction::kOut : Direction::kIn;
      if (port->direction != wanted) {
        error("CC3", ref.origin.where,
              std::string("connector ") + role + " " + quote(ref.to_string()) + " is an " +
                  (as_source ? "input" : "output") + " port of a subcomponent");
        return {};
      }
      return {port, false};
    }
    const auto* port = component.find_port(ref.port);
    if (!port) {
      error("CC3", ref.origin.where,
            std::string("connector ") + role + " refers to unknown port " + quote(ref.port));
      return {};
    }
    Direction wanted = as_source ? Direction::kIn : Direction::kOut;
    if (port->direction != wanted) {
      error("CC3", ref.origin.where,
            std::string("connector ") + role + " " + quote(ref.port) + " is an " +
                (as_source ? "output" : "input") + " port of the component");
      return {};
    }
    return {port, true};
  }

  // CC3, CC4, CC5
  void check_connectors(const ComponentType& component) {
    std::map<std::string, int> drivers;
    std::set<std::string> used_sources;
    for (const auto& connector : component.connectors) {
      auto source = resolve(component, connector.source, true);
      if (source.port) used_sources.insert(connector.source.to_string());
      for (const auto& target_ref : connector.targets) {
        auto target = resolve(component, target_ref, false);
        if (!target.port) continue;
        if (++drivers[target_ref.to_string()] > 1) {
          error("CC5", target_ref.origin.where,
                "port " + quote(target_ref.to_string()) + " has more than one driver");
        }
        if (source.port && source.port->type_name != target.port->type_name &&
            model_.resolve_type(source.port->type_name) &&
            model_.resolve_type(target.port->type_name)) {
          error("CC4", target_ref.origin.where,
                "type mismatch: " + quote(connector.source.to_string()) + " is " +
                    source.port->type_name + " but " + quote(target_ref.to_string()) + " is " +
                    target.port->type_name);
        }
      }
    }

    std::set<std::string> seen;
    for (const auto& sub : component.subcomponents) {
      if (!seen.insert(sub.instance_name).second) continue;
      const auto* type = model_.find_component(sub.type_name);
      if (!type) continue;
      for (const auto& port : type->ports) {
        std::string name = sub.instance_name + "." + port.name;
        if (port.direction == Direction::kIn) {
          if (!drivers.contains(name)) {
            error("CC5", sub.origin.where, "port " + quote(name) + " has no driver");
          }
        } else if (!used_sources.contains(name)) {
          warning("CC5", sub.origin.where, "output port " + quote(name) + " is not connected");
        }
      }
    }
    for (const auto& port : component.ports) {
      if (port.direction == Direction::kOut && !drivers.contains(port.name)) {
        error("CC5", port.origin.where, "output port " + quote(port.name) + " has no driver");
      }
    }
  }

  // CC7: cycles in the composition graph.
  void check_recursion() {
    enum class Mark { kNone, kActive, kDone };
    std::map<std::string, Mark> marks;
    std::vector<std::string> stack;

    std::function<void(const ComponentType&)> visit = [&](const ComponentType& type) {
      marks[type.name] = Mark::kActive;
      stack.push_back(type.name);
      for (const auto& sub : type.subcomponents) {
        const auto* child = model_.find_component(sub.type_name);
        if (!child) continue;
        Mark mark = marks[child->name];
        if (mark == Mark::kActive) {
          std::string chain;
          auto from = std::find(stack.begin(), stack.end(), child->name);
          for (auto it = from; it != stack.end(); ++it) chain += *it + " -> ";
          error("CC7", sub.origin.where, "recursive composition: " + chain + child->name);
        } else if (mark == Mark::kNone) {
          visit(*child);
        }
      }
      stack.pop_back();
      marks[type.name] = Mark::kDone;
    };

    for (const auto& component : model_.components) {
      if (model_.find_component(component.name) != &component) continue;
      if (marks[component.name] == Mark::kNone) visit(component);
    }
  }

  const ArchitectureModel& model_;
  std::vector<Diagnostic> diagnostics_;
};

}  // namespace

CheckReport check_architecture(const ArchitectureModel& model, std::string_view root_type) {
  CheckReport report{ArchitectureChecker(model).run(root_type)};
  sort_diagnostics(report.diagnostics);
  return report;
}

CheckReport check_automaton(const ComponentType& component, const ArchitectureModel& model) {
  CheckReport report;
  if (!component.behavior) return report;
  const Automaton& automaton = *component.behavior;
  auto error = [&](const Origin& origin, std::string message) {
    report.diagnostics.push_back(make_error("CC6", origin.where, std::move(message)));
  };

  std::set<std::string> states;
  for (const auto& state : automaton.states) {
    if (!states.insert(state.name).second) {
      error(state.origin, "duplicate state " + quote(state.name));
    }
  }
  if (!states.contains(automaton.initial_state)) {
    error(automaton.initial_origin,
          "initial state " + quote(automaton.initial_state) + " is not a declared state");
  }

  auto check_actions = [&](const std::vector<Assignment>& actions) {
    std::set<std::string> assigned;
    for (const auto& action : actions) {
      const auto* port = component.find_port(action.port);
      if (!port) {
        error(action.origin, "action assigns unknown port " + quote(action.port));
        continue;
      }
      if (port->direction != Direction::kOut) {
        error(action.origin, "action port " + quote(action.port) + " is not an output port");
        continue;
      }
      if (!assigned.insert(action.port).second) {
        error(action.origin, "port " + quote(action.port) + " is assigned twice");
      }
      auto type = model.resolve_type(port->type_name);
      if (!type) continue;  // CC1
      if (type->kind == TypeKind::kRecord) {
        error(action.origin, "record values cannot be constructed in actions (port " +
                                 quote(action.port) + ")");
      } else if (!fit_literal(action.literal, *type, model)) {
        error(action.origin, "literal " + literal_to_source(action.literal) +
                                 " does not match type " + type->name + " of port " +
                                 quote(action.port));
      }
    }
  };

  check_actions(automaton.initial_actions);
  for (const auto& t : automaton.transitions) {
    if (!states.contains(t.source)) {
      error(t.origin, "transition source " + quote(t.source) + " is not a declared state");
    }
    if (!states.contains(t.target)) {
      error(t.target_origin, "transition target " + quote(t.target) + " is not a declared state");
    }
    for (const auto& atom : t.guard) {
      const auto* port = component.find_port(atom.port);
      if (!port) {
        error(atom.origin, "guard references unknown port " + quote(atom.port));
        continue;
      }
      if (port->direction != Direction::kIn) {
        error(atom.origin, "guard port " + quote(atom.port) + " is not an input port");
        continue;
      }
      auto type = model.resolve_type(port->type_name);
      if (!type) continue;  // CC1
      bool numeric = type->name == "Integer" || type->name == "Double";
      if (is_ordering(atom.op) && !numeric) {
        error(atom.origin, "ordering comparison on non-numeric port " + quote(atom.port));
      } else if (!fit_literal(atom.literal, *type, model)) {
        error(atom.origin, "literal " + literal_to_source(atom.literal) +
                               " does not match type " + type->name + " of port " +
                               quote(atom.port));
      }
    }
    check_actions(t.actions);
  }
  sort_diagnostics(report.diagnostics);
  return report;
}

CheckReport check_binding(const InstanceTree& tree, const ApplicationConfiguration& config,
                          std::span<const CodeLibraryManifest> libraries,
                          std::span<const GeneratorDescriptor> generators,
                          BindingCheckOptions options) {
  CheckReport report;
  auto error = [&](const char* code, const Origin& origin, std::string message) {
    report.diagnostics.push_back(make_error(code, origin.where, std::move(message)));
  };

  std::set<std::string> composed_names;
  tree.visit([&](const InstanceNode& node) {
    if (node.classification == Classification::kComposed) composed_names.insert(node.instance_name);
  });

  std::vector<const CodeLibraryManifest*> imported;
  for (const auto& import : config.imports) {
    auto it = std::find_if(libraries.begin(), libraries.end(),
                           [&](const CodeLibraryManifest& lib) { return lib.name == import.library; });
    if (it == libraries.end()) {
      error("CC9", import.origin, "code library " + quote(import.library) + " not found");
      continue;
    }
    if (composed_names.contains(import.library)) {
      error("CC11", import.origin,
            "library name " + quote(import.library) + " collides with a composed instance name");
    }
    imported.push_back(&*it);
  }

  struct Resolved {
    const BindingDecl* decl;
    const CodeLibraryManifest* library;
  };
  std::vector<Resolved> resolved;
  std::set<std::string> bound_instances;

  for (const auto& binding : config.bindings) {
    const auto* node = tree.find(binding.instance);
    if (!node) {
      error("CC11", binding.origin, "instance " + quote(binding.instance) + " does not exist");
      continue;
    }
    if (node->classification != Classification::kAbstract) {
      error("CC11", binding.origin,
            "instance " + quote(binding.instance) + " is " +
                std::string(to_string(node->classification)) +
                "; only abstract instances can be bound");
      continue;
    }
    bound_instances.insert(binding.instance);

    std::vector<const CodeLibraryManifest*> providers;
    for (const auto* lib : imported) {
      if (lib->find(binding.implementation)) providers.push_back(lib);
    }
    if (providers.empty()) {
      error("CC9", binding.implementation_origin,
            "implementation " + quote(binding.implementation) +
                " not found in imported libraries");
      continue;
    }
    if (providers.size() > 1) {
      std::string names;
      for (const auto* lib : providers) names += (names.empty() ? "" : ", ") + lib->name;
      error("CC9", binding.implementation_origin,
            "implementation " + quote(binding.implementation) + " is ambiguous (" + names + ")");
      continue;
    }
    const auto* impl = providers.front()->find(binding.implementation);
    if (impl->implements != node->type_name) {
      error("CC9", binding.implementation_origin,
            "implementation " + quote(binding.implementation) + " implements " +
                quote(impl->implements) + ", not " + quote(node->type_name));
      continue;
    }
    resolved.push_back({&binding, providers.front()});
  }

  tree.visit([&](const InstanceNode& node) {
    if (node.classification == Classification::kAbstract &&
        !bound_instances.contains(node.qualified_name)) {
      error("CC8", config.origin,
            "abstract instance " + quote(node.qualified_name) + " is not bound");
    }
  });

  std::optional<std::string> reference_rte;
  std::string reference_source;
  if (options.check_generators) {
    std::map<GeneratorRole, std::string> roles;
    for (const auto& ref : config.generators) {
      auto it = std::find_if(generators.begin(), generators.end(),
                             [&](const GeneratorDescriptor& g) { return g.name == ref.name; });
      if (it == generators.end()) {
        error("CC10", ref.origin, "unknown generator " + quote(ref.name));
        continue;
      }
      if (!reference_rte) {
        reference_rte = it->rte;
        reference_source = "generator";
      } else if (it->rte != *reference_rte) {
        error("CC10", ref.origin,
              "generator " + quote(ref.name) + " targets RTE " + quote(it->rte) +
                  " but the selected generators target " + quote(*reference_rte));
      }
      if (!roles.emplace(it->role, ref.name).second) {
        error("CC10", ref.origin,
              "generator role " + quote(to_string(it->role)) + " is selected twice");
      }
    }
    std::string missing;
    for (auto role : {GeneratorRole::kStructure, GeneratorRole::kBehavior, GeneratorRole::kDatatype}) {
      if (!roles.contains(role)) missing += (missing.empty() ? "" : ", ") + std::string(to_string(role));
    }
    if (!missing.empty()) {
      error("CC10", config.origin, "generator selection does not cover role(s): " + missing);
    }
  }

  std::set<std::string> checked_libraries;
  for (const auto& r : resolved) {
    if (!checked_libraries.insert(r.library->name).second) continue;
    if (!reference_rte) {
      reference_rte = r.library->rte;
      reference_source = r.library->name;
      continue;
    }
    if (r.library->rte == *reference_rte) continue;
    std::string against = reference_source == "generator"
                              ? "the selected generators target " + quote(*reference_rte)
                              : "library " + quote(reference_source) + " targets " +
                                    quote(*reference_rte);
    error("CC10", r.decl->implementation_origin,
          "library " + quote(r.library->name) + " targets RTE " + quote(r.library->rte) +
              " but " + against);
  }

  sort_diagnostics(report.diagnostics);
  return report;
}

}  // namespace macc
