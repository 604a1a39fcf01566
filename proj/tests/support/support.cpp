#include "support.hpp"

#include <fstream>
#include <functional>
#include <random>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "macc/binding.hpp"
#include "macc/codegen.hpp"
#include "macc/parser.hpp"
#include "macc/wellformedness.hpp"

namespace macc::test {

namespace fs = std::filesystem;

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

Workspace load(std::vector<fs::path> models, std::vector<fs::path> libs) {
  return load_workspace(models, libs);
}

Workspace load_bumperbot() {
  return load({kFixtures / "bumperbot"}, {kFixtures / "libs"});
}

Workspace load_wrapped_bumperbot() {
  return load({kFixtures / "bumperbot_wrapped", kFixtures / "bumperbot"}, {kFixtures / "libs"});
}

namespace {

template <typename T>
T unwrap(ParseResult<T> result) {
  if (!result.ok()) throw std::runtime_error(render(result.diagnostics));
  return std::move(*result.value);
}

SourceUnit unit(std::string_view text, std::string_view keyword, std::string_view extension,
                SourceKind kind) {
  std::regex pattern(std::string(keyword) + R"(\s+([A-Za-z_][A-Za-z0-9_]*))");
  std::match_results<std::string_view::const_iterator> match;
  std::string name = "Unnamed";
  if (std::regex_search(text.begin(), text.end(), match, pattern)) name = match[1].str();
  return SourceUnit{name + std::string(extension), kind, std::string(text)};
}

}  // namespace

ComponentType arc(std::string_view text) {
  return unwrap(parse_architecture(unit(text, "component", ".arc", SourceKind::kArchitecture)));
}

ClassDiagram cd(std::string_view text) {
  return unwrap(parse_class_diagram(unit(text, "classdiagram", ".cd", SourceKind::kClassDiagram)));
}

ApplicationConfiguration app(std::string_view text) {
  return unwrap(parse_app_config(unit(text, "application", ".app", SourceKind::kAppConfig)));
}

CodeLibraryManifest lib(std::string_view text) {
  return unwrap(parse_lib_props(unit(text, "library", ".lib", SourceKind::kLibProps)));
}

ApplicationConfiguration load_app(const fs::path& path) {
  return unwrap(parse_app_config(read_source(path)));
}

ArchitectureModel model_of(std::vector<std::string_view> arcs, std::vector<std::string_view> cds) {
  ArchitectureModel model;
  for (auto text : arcs) model.components.push_back(arc(text));
  for (auto text : cds) model.class_diagrams.push_back(cd(text));
  return model;
}

InstanceTree bind(const ArchitectureModel& model, std::string_view root,
                  const ApplicationConfiguration& config,
                  const std::vector<CodeLibraryManifest>& libraries, bool check_generators) {
  auto tree = instantiate(model, root);
  BindingCheckOptions options;
  options.check_generators = check_generators;
  auto report = check_binding(tree, config, libraries, registry(), options);
  if (!report.ok()) throw std::runtime_error(render(report.diagnostics));
  return apply_binding(tree, config, libraries);
}

fs::path scratch_dir(std::string_view name) {
  auto dir = fs::temp_directory_path() / "macc-tests" / std::string(name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

namespace {

Port port(std::string name, Direction direction) {
  return Port{std::move(name), direction, "Integer", {}};
}

PortRef ref(std::optional<std::string> instance, std::string port_name) {
  return PortRef{std::move(instance), std::move(port_name), {}};
}

// Signal ports of a type: composed types use x/y, atomic types a/b.
std::pair<std::string, std::string> signal_ports(const ComponentType& type) {
  return type.is_atomic() ? std::pair{"a", "b"} : std::pair{"x", "y"};
}

class RandomBuilder {
 public:
  RandomBuilder(std::uint32_t seed, int max_depth, int max_children)
      : rng_(seed), max_depth_(max_depth), max_children_(max_children) {}

  RandomSystem build() {
    RandomSystem system;
    // Leaf types: two abstract, one fully modeled relay.
    for (std::string name : {"SourceLeaf", "RelayLeaf"}) {
      ComponentType leaf;
      leaf.name = name;
      leaf.ports = {port("a", Direction::kIn), port("b", Direction::kOut)};
      model_.components.push_back(std::move(leaf));
    }
    ComponentType modeled;
    modeled.name = "ModeledLeaf";
    modeled.ports = {port("a", Direction::kIn), port("b", Direction::kOut)};
    Automaton automaton;
    automaton.states = {StateDecl{"Idle", {}}, StateDecl{"Busy", {}}};
    automaton.initial_state = "Idle";
    automaton.initial_actions = {Assignment{"b", std::int64_t{0}, {}}};
    automaton.transitions = {
        Transition{"Idle", "Busy", {GuardAtom{"a", CompareOp::kGt, std::int64_t{3}, {}}},
                   {Assignment{"b", std::int64_t{1}, {}}}, {}, {}},
        Transition{"Busy", "Idle", {}, {Assignment{"b", std::int64_t{2}, {}}}, {}, {}}};
    modeled.behavior = std::move(automaton);
    model_.components.push_back(std::move(modeled));

    system.root = make_composed(1);
    system.model = std::move(model_);

    CodeLibraryManifest library;
    library.name = "RandomLib";
    library.rte = "rte-a";
    library.implementations = {
        ImplementationDecl{"FastSource", "SourceLeaf", std::nullopt, {}},
        ImplementationDecl{"SlowSource", "SourceLeaf", std::nullopt, {}},
        ImplementationDecl{"PlainRelay", "RelayLeaf", std::nullopt, {}},
    };
    system.libraries.push_back(library);

    system.config.name = "RandomApp";
    system.config.imports = {Import{"RandomLib", {}}};
    system.config.generators = {GeneratorRef{"structure-a", {}}, GeneratorRef{"behavior-a", {}},
                                GeneratorRef{"datatypes-a", {}}};
    auto tree = instantiate(system.model, system.root);
    tree.visit([&](const InstanceNode& node) {
      if (node.classification != Classification::kAbstract) return;
      std::string impl = node.type_name == "RelayLeaf" ? "PlainRelay"
                         : coin()                      ? "FastSource"
                                                       : "SlowSource";
      system.config.bindings.push_back(BindingDecl{node.qualified_name, impl, {}, {}});
    });
    return system;
  }

 private:
  bool coin() { return std::uniform_int_distribution<int>(0, 1)(rng_) == 1; }

  // A composed type is a pipeline x -> c1 -> c2 -> ... -> y.
  std::string make_composed(int depth) {
    ComponentType type;
    type.name = "Composite" + std::to_string(counter_++);
    type.ports = {port("x", Direction::kIn), port("y", Direction::kOut)};
    int children = std::uniform_int_distribution<int>(1, max_children_)(rng_);
    std::vector<std::string> child_types;
    for (int i = 0; i < children; ++i) {
      bool nest = depth + 2 <= max_depth_ && std::uniform_int_distribution<int>(0, 2)(rng_) == 0;
      if (nest) {
        child_types.push_back(make_composed(depth + 1));
      } else {
        static const char* kLeaves[] = {"SourceLeaf", "RelayLeaf", "ModeledLeaf"};
        child_types.push_back(kLeaves[std::uniform_int_distribution<int>(0, 2)(rng_)]);
      }
    }
    for (int i = 0; i < children; ++i) {
      type.subcomponents.push_back(Subcomponent{child_types[i], "c" + std::to_string(i), {}});
    }
    auto ports_of = [&](int i) { return signal_ports(*find(child_types[i])); };
    type.connectors.push_back(Connector{ref(std::nullopt, "x"), {ref("c0", ports_of(0).first)}, {}});
    for (int i = 0; i + 1 < children; ++i) {
      type.connectors.push_back(
          Connector{ref("c" + std::to_string(i), ports_of(i).second),
                    {ref("c" + std::to_string(i + 1), ports_of(i + 1).first)},
                    {}});
    }
    type.connectors.push_back(Connector{ref("c" + std::to_string(children - 1),
                                            ports_of(children - 1).second),
                                        {ref(std::nullopt, "y")},
                                        {}});
    std::string name = type.name;
    model_.components.push_back(std::move(type));
    return name;
  }

  const ComponentType* find(const std::string& name) const { return model_.find_component(name); }

  std::mt19937 rng_;
  int max_depth_;
  int max_children_;
  int counter_ = 0;
  ArchitectureModel model_;
};

}  // namespace

RandomSystem random_system(std::uint32_t seed, int max_depth, int max_children) {
  return RandomBuilder(seed, max_depth, max_children).build();
}

}  // namespace macc::test
