#include <gtest/gtest.h>

#include "macc/binding.hpp"
#include "macc/codegen.hpp"
#include "macc/parser.hpp"
#include "macc/wellformedness.hpp"
#include "support.hpp"

namespace macc {
namespace {

constexpr std::uint32_t kSeeds = 50;

std::size_t expected_nodes(const ArchitectureModel& model, const std::string& type) {
  std::size_t count = 1;
  for (const auto& sub : model.find_component(type)->subcomponents) {
    count += expected_nodes(model, sub.type_name);
  }
  return count;
}

std::size_t depth(const InstanceNode& node) {
  std::size_t deepest = 0;
  for (const auto& child : node.children) deepest = std::max(deepest, depth(child));
  return deepest + 1;
}

std::size_t widest(const InstanceNode& node) {
  std::size_t width = node.children.size();
  for (const auto& child : node.children) width = std::max(width, widest(child));
  return width;
}

void strip_bindings(InstanceNode& node) {
  node.binding.reset();
  for (auto& child : node.children) strip_bindings(child);
}

TEST(PropertiesTest, RandomSystemsAreWellFormedAndBounded) {
  for (std::uint32_t seed = 0; seed < kSeeds; ++seed) {
    auto system = test::random_system(seed);
    auto report = check_architecture(system.model, system.root);
    EXPECT_TRUE(report.diagnostics.empty()) << seed << "\n" << render(report.diagnostics);
    auto tree = instantiate(system.model, system.root);
    EXPECT_LE(depth(tree.root), 4u);
    EXPECT_LE(widest(tree.root), 5u);
    auto binding = check_binding(tree, system.config, system.libraries, registry());
    EXPECT_TRUE(binding.ok()) << seed << "\n" << render(binding.diagnostics);
  }
}

TEST(PropertiesTest, InstantiateNodeCountMatchesTypeExpansion) {
  for (std::uint32_t seed = 0; seed < kSeeds; ++seed) {
    auto system = test::random_system(seed);
    auto tree = instantiate(system.model, system.root);
    EXPECT_EQ(tree.size(), expected_nodes(system.model, system.root)) << seed;
  }
}

TEST(PropertiesTest, ApplyBindingIsIdempotentAndPreservesStructure) {
  for (std::uint32_t seed = 0; seed < kSeeds; ++seed) {
    auto system = test::random_system(seed);
    auto tree = instantiate(system.model, system.root);
    auto once = apply_binding(tree, system.config, system.libraries);
    EXPECT_EQ(apply_binding(once, system.config, system.libraries), once) << seed;
    auto stripped = once;
    strip_bindings(stripped.root);
    EXPECT_EQ(stripped, tree) << seed;
  }
}

TEST(PropertiesTest, PrintParseRoundTripOnRandomComponents) {
  for (std::uint32_t seed = 0; seed < kSeeds; ++seed) {
    auto system = test::random_system(seed);
    for (const auto& component : system.model.components) {
      SourceUnit unit{component.name + ".arc", SourceKind::kArchitecture, print(component)};
      auto parsed = parse_architecture(unit);
      ASSERT_TRUE(parsed.ok()) << unit.text << render(parsed.diagnostics);
      EXPECT_EQ(*parsed.value, component) << unit.text;
    }
  }
}

// Wrapping the root in a pass-through layer changes names, not wiring.
TEST(PropertiesTest, FlatteningIgnoresPassThroughLayers) {
  for (std::uint32_t seed = 0; seed < kSeeds; ++seed) {
    auto system = test::random_system(seed);
    auto flat = flatten(instantiate(system.model, system.root), system.model);

    auto model = system.model;
    model.components.push_back(test::arc("component Wrapper {\n  port in Integer x, out Integer y;\n"
                                         "  component " + system.root + " inner;\n"
                                         "  connect x -> inner.x;\n  connect inner.y -> y;\n}"));
    auto wrapped = flatten(instantiate(model, "Wrapper"), model);

    auto rename = [&](std::string name) { return system.root + name.substr(std::string("Wrapper.inner").size()); };
    ASSERT_EQ(wrapped.instances.size(), flat.instances.size());
    for (std::size_t i = 0; i < flat.instances.size(); ++i) {
      EXPECT_EQ(rename(wrapped.instances[i].qualified_name), flat.instances[i].qualified_name);
    }
    std::vector<Wire> renamed;
    for (auto wire : wrapped.wires) {
      wire.source.instance = rename(wire.source.instance);
      wire.target.instance = rename(wire.target.instance);
      renamed.push_back(wire);
    }
    std::sort(renamed.begin(), renamed.end());
    EXPECT_EQ(renamed, flat.wires) << seed;
  }
}

TEST(PropertiesTest, GenerationIsDeterministic) {
  for (std::uint32_t seed = 0; seed < kSeeds; ++seed) {
    auto system = test::random_system(seed);
    auto tree = apply_binding(instantiate(system.model, system.root), system.config,
                              system.libraries);
    EXPECT_EQ(generate(tree, system.model, system.config),
              generate(tree, system.model, system.config))
        << seed;
  }
}

// Adding an unrelated valid component type leaves existing diagnostics untouched.
TEST(PropertiesTest, CheckingIsMonotoneInUnrelatedTypes) {
  std::vector<std::string> sources = {
      "component S { port out Integer v; }",
      "component K { port in Integer v, in Integer w; }",
      "component T { component S s; component K k; connect s.v -> k.v; connect s.v -> k.zz; }"};
  auto before = check_architecture(test::model_of({sources.begin(), sources.end()}), "T");
  ASSERT_FALSE(before.diagnostics.empty());
  for (std::uint32_t seed = 0; seed < kSeeds; ++seed) {
    auto extra = sources;
    extra.push_back("component Unrelated" + std::to_string(seed) + " { port in Integer a" +
                    std::to_string(seed) + ", out Integer b; }");
    auto after = check_architecture(test::model_of({extra.begin(), extra.end()}), "T");
    EXPECT_EQ(render(after.diagnostics), render(before.diagnostics)) << seed;
  }
}

}  // namespace
}  // namespace macc
