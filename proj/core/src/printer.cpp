#include <string>

#include "macc/parser.hpp"

namespace macc {

namespace {

std::string actions_to_source(const std::vector<Assignment>& actions) {
  std::string out = "{";
  for (std::size_t i = 0; i < actions.size(); ++i) {
    if (i > 0) out += ", ";
    out += actions[i].port + " = " + literal_to_source(actions[i].literal);
  }
  return out + "}";
}

}  // namespace

std::string print(const ComponentType& component) {
  std::string out = "component " + component.name + " {\n";
  for (const auto& import : component.imports) out += "  import " + import.library + ".*;\n";
  for (const auto& port : component.ports) {
    out += "  port " + std::string(to_string(port.direction)) + " " + port.type_name + " " +
           port.name + ";\n";
  }
  for (const auto& sub : component.subcomponents) {
    out += "  component " + sub.type_name + " " + sub.instance_name + ";\n";
  }
  for (const auto& connector : component.connectors) {
    out += "  connect " + connector.source.to_string() + " ->";
    for (std::size_t i = 0; i < connector.targets.size(); ++i) {
      out += (i == 0 ? " " : ", ") + connector.targets[i].to_string();
    }
    out += ";\n";
  }
  if (const auto& automaton = component.behavior) {
    out += "  automaton {\n    state";
    for (std::size_t i = 0; i < automaton->states.size(); ++i) {
      out += (i == 0 ? " " : ", ") + automaton->states[i].name;
    }
    out += ";\n    initial " + automaton->initial_state;
    if (!automaton->initial_actions.empty()) {
      out += " / " + actions_to_source(automaton->initial_actions);
    }
    out += ";\n";
    for (const auto& t : automaton->transitions) {
      out += "    " + t.source + " -> " + t.target;
      if (!t.guard.empty()) {
        out += " [";
        for (std::size_t i = 0; i < t.guard.size(); ++i) {
          if (i > 0) out += " && ";
          out += t.guard[i].port + " " + std::string(to_string(t.guard[i].op)) + " " +
                 literal_to_source(t.guard[i].literal);
        }
        out += "]";
      }
      if (!t.actions.empty()) out += " / " + actions_to_source(t.actions);
      out += ";\n";
    }
    out += "  }\n";
  }
  out += "}\n";
  return out;
}

std::string print(const ClassDiagram& diagram) {
  std::string out = "classdiagram " + diagram.name + " {\n";
  for (const auto& e : diagram.enums) {
    out += "  enum " + e.name + " {";
    for (std::size_t i = 0; i < e.literals.size(); ++i) {
      out += (i == 0 ? " " : ", ") + e.literals[i];
    }
    out += "; }\n";
  }
  for (const auto& r : diagram.records) {
    out += "  class " + r.name + " {\n";
    for (const auto& field : r.fields) out += "    " + field.type_name + " " + field.name + ";\n";
    out += "  }\n";
  }
  out += "}\n";
  return out;
}

std::string print(const ApplicationConfiguration& config) {
  std::string out;
  for (const auto& import : config.imports) out += "import " + import.library + ".*;\n";
  if (!config.imports.empty()) out += "\n";
  out += "application " + config.name + " {\n  generators";
  for (std::size_t i = 0; i < config.generators.size(); ++i) {
    out += (i == 0 ? " " : ", ") + config.generators[i].name;
  }
  out += ";\n  bindings\n";
  for (std::size_t i = 0; i < config.bindings.size(); ++i) {
    const auto& b = config.bindings[i];
    out += "    map " + b.instance + " to " + b.implementation;
    out += i + 1 < config.bindings.size() ? ",\n" : ";\n";
  }
  out += "}\n";
  return out;
}

std::string print(const CodeLibraryManifest& library) {
  std::string out = "library " + library.name + " {\n  rte " + library.rte + ";\n";
  for (const auto& impl : library.implementations) {
    out += "  implementation " + impl.name + " implements " + impl.implements;
    if (impl.kind) {
      out += " kind " + impl.kind->name;
      if (impl.kind->parameter) out += "(" + std::to_string(*impl.kind->parameter) + ")";
    }
    out += ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace macc
