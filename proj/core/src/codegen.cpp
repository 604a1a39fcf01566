#include "macc/codegen.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <set>
#include <system_error>

#include "macc/error.hpp"

namespace macc {

namespace fs = std::filesystem;

std::string_view to_string(GeneratorRole role) {
  switch (role) {
    case GeneratorRole::kStructure: return "structure";
    case GeneratorRole::kBehavior: return "behavior";
    case GeneratorRole::kDatatype: return "datatype";
  }
  return "?";
}

std::span<const GeneratorDescriptor> registry() {
  static const std::vector<GeneratorDescriptor> kRegistry = {
      {"structure-a", "rte-a", GeneratorRole::kStructure},
      {"behavior-a", "rte-a", GeneratorRole::kBehavior},
      {"datatypes-a", "rte-a", GeneratorRole::kDatatype},
      {"structure-b", "rte-b", GeneratorRole::kStructure},
      {"behavior-b", "rte-b", GeneratorRole::kBehavior},
      {"datatypes-b", "rte-b", GeneratorRole::kDatatype},
  };
  return kRegistry;
}

const GeneratorDescriptor* find_generator(std::string_view name) {
  for (const auto& generator : registry()) {
    if (generator.name == name) return &generator;
  }
  return nullptr;
}

std::string_view builtin_mapping(std::string_view rte, Builtin builtin) {
  // Integer, Boolean, String, Double
  static constexpr std::array<std::string_view, 4> kRteA = {"int", "boolean", "String", "double"};
  static constexpr std::array<std::string_view, 4> kRteB = {"int", "bool", "str", "float"};
  auto index = static_cast<std::size_t>(builtin);
  if (rte == "rte-a") return kRteA[index];
  if (rte == "rte-b") return kRteB[index];
  throw Error(ErrorCode::kRteMismatch, "no builtin type mapping for RTE '" + std::string(rte) + "'");
}

namespace {

std::string header(const GeneratorDescriptor& generator) {
  return "// rte: " + generator.rte + "\n// generator: " + generator.name + "\n";
}

std::vector<std::string> factory_lines(const InstanceNode& node) {
  std::vector<std::string> lines;
  for (const auto& child : node.children) {
    std::string created;
    switch (child.classification) {
      case Classification::kAbstract:
        if (!child.binding) throw Error(ErrorCode::kUnboundInstance, child.qualified_name);
        created = child.binding->implementation;
        break;
      case Classification::kFullyModeled:
        created = child.type_name + "Impl";
        break;
      case Classification::kComposed:
        created = child.type_name;
        break;
    }
    lines.push_back("  " + child.instance_name + " = new " + created + "\n");
  }
  return lines;
}

std::string actions_text(const std::vector<Assignment>& actions) {
  std::string out = "{";
  for (std::size_t i = 0; i < actions.size(); ++i) {
    if (i > 0) out += ", ";
    out += actions[i].port + " = " + literal_to_source(actions[i].literal);
  }
  return out + "}";
}

}  // namespace

std::string emit_structure(const ComponentType& component, const InstanceTree& bound_tree,
                           const GeneratorDescriptor& generator) {
  std::string out = header(generator);
  out += "COMPONENT " + component.name + "\nINTERFACE\n";
  for (const auto& port : component.ports) {
    out += "  " + std::string(to_string(port.direction)) + " " + port.type_name + " " +
           port.name + "\n";
  }
  if (component.is_atomic()) return out;

  std::optional<std::vector<std::string>> factory;
  bound_tree.visit([&](const InstanceNode& node) {
    if (node.type_name != component.name || node.classification != Classification::kComposed) {
      return;
    }
    auto lines = factory_lines(node);
    if (!factory) {
      factory = std::move(lines);
    } else if (*factory != lines) {
      throw Error(ErrorCode::kAmbiguousFactory,
                  "instances of '" + component.name + "' are bound differently (" +
                      node.qualified_name + ")");
    }
  });
  if (factory) {
    out += "FACTORY\n";
    for (const auto& line : *factory) out += line;
  }
  return out;
}

std::string emit_behavior(const ComponentType& component, const GeneratorDescriptor& generator) {
  if (classify(component) != Classification::kFullyModeled) {
    throw Error(ErrorCode::kNotFullyModeled, "'" + component.name + "'");
  }
  const Automaton& automaton = *component.behavior;
  std::string out = header(generator);
  out += "COMPONENT " + component.name + "\nBEHAVIOR\n";
  for (const auto& state : automaton.states) out += "  state " + state.name + "\n";
  out += "  initial " + automaton.initial_state;
  if (!automaton.initial_actions.empty()) out += " / " + actions_text(automaton.initial_actions);
  out += "\n";
  for (const auto& t : automaton.transitions) {
    out += "  " + t.source + " -> " + t.target;
    if (!t.guard.empty()) {
      out += " [";
      for (std::size_t i = 0; i < t.guard.size(); ++i) {
        if (i > 0) out += " && ";
        out += t.guard[i].port + " " + std::string(to_string(t.guard[i].op)) + " " +
               literal_to_source(t.guard[i].literal);
      }
      out += "]";
    }
    if (!t.actions.empty()) out += " / " + actions_text(t.actions);
    out += "\n";
  }
  return out;
}

std::vector<GeneratedFile> emit_datatypes(std::span<const ClassDiagram> diagrams,
                                          const GeneratorDescriptor& generator) {
  std::vector<GeneratedFile> files;
  for (const auto& cd : diagrams) {
    std::string out = header(generator);
    out += "DATATYPES " + cd.name + "\nBUILTINS\n";
    for (std::size_t i = 0; i < kBuiltinNames.size(); ++i) {
      out += "  " + std::string(kBuiltinNames[i]) + " -> " +
             std::string(builtin_mapping(generator.rte, static_cast<Builtin>(i))) + "\n";
    }
    for (const auto& e : cd.enums) {
      out += "ENUM " + e.name + "\n";
      for (const auto& literal : e.literals) out += "  " + literal + "\n";
    }
    for (const auto& r : cd.records) {
      out += "RECORD " + r.name + "\n";
      for (const auto& field : r.fields) out += "  " + field.name + " : " + field.type_name + "\n";
    }
    files.push_back({generator.rte + "/types/" + cd.name + ".gen", std::move(out)});
  }
  return files;
}

GeneratedFileSet generate(const InstanceTree& bound_tree, const ArchitectureModel& model,
                          const ApplicationConfiguration& config) {
  std::map<GeneratorRole, const GeneratorDescriptor*> selected;
  for (const auto& ref : config.generators) {
    const auto* generator = find_generator(ref.name);
    if (!generator) throw Error(ErrorCode::kUnknownGenerator, "'" + ref.name + "'");
    if (!selected.emplace(generator->role, generator).second) {
      throw Error(ErrorCode::kDuplicateRole, std::string(to_string(generator->role)));
    }
  }
  for (auto role : {GeneratorRole::kStructure, GeneratorRole::kBehavior, GeneratorRole::kDatatype}) {
    if (!selected.contains(role)) throw Error(ErrorCode::kRoleMissing, std::string(to_string(role)));
  }

  GeneratedFileSet set;
  // Order of execution: datatype, structure, behavior.
  set.files = emit_datatypes(model.class_diagrams, *selected[GeneratorRole::kDatatype]);

  const auto& structure = *selected[GeneratorRole::kStructure];
  const auto& behavior = *selected[GeneratorRole::kBehavior];
  std::set<std::string> emitted;
  for (const auto& component : model.components) {
    if (!emitted.insert(component.name).second) continue;
    set.files.push_back({structure.rte + "/" + component.name + ".gen",
                         emit_structure(component, bound_tree, structure)});
  }
  emitted.clear();
  for (const auto& component : model.components) {
    if (!emitted.insert(component.name).second) continue;
    if (classify(component) != Classification::kFullyModeled) continue;
    set.files.push_back({behavior.rte + "/behavior/" + component.name + ".gen",
                         emit_behavior(component, behavior)});
  }

  std::sort(set.files.begin(), set.files.end(),
            [](const GeneratedFile& a, const GeneratedFile& b) { return a.path < b.path; });
  return set;
}

void write_file_set(const GeneratedFileSet& files, const fs::path& out_dir) {
  for (const auto& file : files.files) {
    fs::path target = out_dir / fs::path(file.path);
    std::error_code ec;
    fs::create_directories(target.parent_path(), ec);
    if (ec) {
      throw Error(ErrorCode::kWriteError,
                  "cannot create " + target.parent_path().string() + ": " + ec.message());
    }
    std::ofstream out(target, std::ios::binary | std::ios::trunc);
    out << file.text;
    out.close();
    if (!out) throw Error(ErrorCode::kWriteError, "cannot write " + target.string());
  }
}

GeneratedFileSet orchestrate(const InstanceTree& bound_tree, const ArchitectureModel& model,
                             const ApplicationConfiguration& config, const fs::path& out_dir) {
  auto files = generate(bound_tree, model, config);
  write_file_set(files, out_dir);
  return files;
}

}  // namespace macc
