#include <gtest/gtest.h>

#include <algorithm>

#include "macc/error.hpp"
#include "macc/parser.hpp"
#include "support.hpp"

namespace macc {
namespace {

using test::kFixtures;

SourceUnit arc_unit(std::string name, std::string text) {
  return SourceUnit{name + ".arc", SourceKind::kArchitecture, std::move(text)};
}

std::string first_diagnostic(const std::vector<Diagnostic>& diagnostics) {
  return diagnostics.empty() ? std::string() : render(diagnostics.front());
}

TEST(ParserTest, ParsesBumperBotRoot) {
  auto result = parse_architecture(read_source(kFixtures / "bumperbot" / "BumperBot.arc"));
  ASSERT_TRUE(result.ok()) << render(result.diagnostics);
  const auto& bot = *result.value;
  EXPECT_EQ(bot.name, "BumperBot");
  ASSERT_EQ(bot.imports.size(), 1u);
  EXPECT_EQ(bot.imports[0].library, "SenseActModels");
  ASSERT_EQ(bot.subcomponents.size(), 5u);
  EXPECT_EQ(bot.subcomponents[3].type_name, "Motor");
  EXPECT_EQ(bot.subcomponents[4].instance_name, "rightMotor");
  ASSERT_EQ(bot.connectors.size(), 5u);
  EXPECT_EQ(bot.connectors[0].source.to_string(), "sensor.data");
  EXPECT_EQ(bot.connectors[0].targets[0].to_string(), "controller.distance");
  EXPECT_EQ(classify(bot), Classification::kComposed);
}

TEST(ParserTest, ParsesAutomaton) {
  auto result = parse_architecture(read_source(kFixtures / "bumperbot" / "BumpControl.arc"));
  ASSERT_TRUE(result.ok()) << render(result.diagnostics);
  const auto& behavior = *result.value->behavior;
  ASSERT_EQ(behavior.states.size(), 3u);
  EXPECT_EQ(behavior.initial_state, "DRIVING");
  ASSERT_EQ(behavior.initial_actions.size(), 2u);
  EXPECT_EQ(behavior.initial_actions[0].literal, Literal(EnumValue{"MotorCmd", "FORWARD"}));
  ASSERT_EQ(behavior.transitions.size(), 3u);
  const auto& first = behavior.transitions[0];
  EXPECT_EQ(first.source, "DRIVING");
  EXPECT_EQ(first.target, "BACKING");
  ASSERT_EQ(first.guard.size(), 1u);
  EXPECT_EQ(first.guard[0].op, CompareOp::kLt);
  EXPECT_EQ(first.guard[0].literal, Literal(std::int64_t{10}));
  EXPECT_EQ(first.actions[2].literal, Literal(EnumValue{"", "START"}));
  EXPECT_EQ(classify(*result.value), Classification::kFullyModeled);
}

TEST(ParserTest, OriginsPointAtDeclarations) {
  auto result = parse_architecture(arc_unit("A", "component A {\n  port in Integer x;\n}\n"));
  ASSERT_TRUE(result.ok());
  EXPECT_EQ(result.value->origin.where.line, 1);
  EXPECT_EQ(result.value->origin.where.column, 11);
  EXPECT_EQ(result.value->ports[0].origin.where.line, 2);
  EXPECT_EQ(result.value->ports[0].origin.where.column, 19);
}

TEST(ParserTest, LiteralsOfEveryKind) {
  auto component = test::arc(R"(component L {
  port in Double d, in String s, in Boolean b, out Integer o;
  automaton {
    state A;
    initial A / {o = -3};
    A -> A [d >= 2.5e1 && s == "q\"x\n" && b != false] / {o = 7};
  }
})");
  const auto& guard = component.behavior->transitions[0].guard;
  ASSERT_EQ(guard.size(), 3u);
  EXPECT_EQ(guard[0].literal, Literal(25.0));
  EXPECT_EQ(guard[1].literal, Literal(std::string("q\"x\n")));
  EXPECT_EQ(guard[2].literal, Literal(false));
  EXPECT_EQ(component.behavior->initial_actions[0].literal, Literal(std::int64_t{-3}));
}

TEST(ParserTest, HyphenatedIdentifiers) {
  auto config = test::app(R"(application A {
  generators structure-a, behavior-a, datatypes-a;
  bindings map A.x to Impl;
})");
  ASSERT_EQ(config.generators.size(), 3u);
  EXPECT_EQ(config.generators[0].name, "structure-a");
  auto library = test::lib("library L { rte rte-b; implementation I implements T kind timer(4); }");
  EXPECT_EQ(library.rte, "rte-b");
  ASSERT_TRUE(library.implementations[0].kind.has_value());
  EXPECT_EQ(library.implementations[0].kind->name, "timer");
  EXPECT_EQ(library.implementations[0].kind->parameter, 4);
}

TEST(ParserTest, SyntaxErrorStopsAtFirstError) {
  auto result = parse_architecture(arc_unit("A", "component A {\n  port in Integer;\n  port x;\n}\n"));
  EXPECT_FALSE(result.value.has_value());
  ASSERT_EQ(result.diagnostics.size(), 1u);
  EXPECT_EQ(first_diagnostic(result.diagnostics),
            "error SYNTAX A.arc:2:18 expected port name, found ';'");
}

TEST(ParserTest, ReservedKeywordIsNotAnIdentifier) {
  auto result = parse_architecture(arc_unit("A", "component A { port in Integer state; }"));
  ASSERT_EQ(result.diagnostics.size(), 1u);
  EXPECT_EQ(result.diagnostics[0].code, "SYNTAX");
  EXPECT_NE(result.diagnostics[0].message.find("reserved keyword 'state'"), std::string::npos);
}

TEST(ParserTest, FileNameMustMatchComponent) {
  auto result = parse_architecture(arc_unit("Other", "component A { }"));
  ASSERT_EQ(result.diagnostics.size(), 1u);
  EXPECT_EQ(result.diagnostics[0].code, "NAME");
  EXPECT_EQ(result.diagnostics[0].location.column, 11);
}

TEST(ParserTest, ConfigurationParametersAreUnsupported) {
  auto params = parse_architecture(arc_unit("A", "component A(Integer n) { }"));
  ASSERT_EQ(params.diagnostics.size(), 1u);
  EXPECT_EQ(params.diagnostics[0].code, "UNSUPPORTED");
  auto generics = parse_architecture(arc_unit("A", "component A<T> { }"));
  ASSERT_EQ(generics.diagnostics.size(), 1u);
  EXPECT_EQ(generics.diagnostics[0].code, "UNSUPPORTED");
}

TEST(ParserTest, DuplicateEnumLiteral) {
  SourceUnit unit{"E.cd", SourceKind::kClassDiagram, "classdiagram E { enum C { A, B, A; } }"};
  auto result = parse_class_diagram(unit);
  ASSERT_EQ(result.diagnostics.size(), 1u);
  EXPECT_EQ(result.diagnostics[0].code, "DUPLICATE");
}

TEST(ParserTest, DuplicateBindingIsReported) {
  SourceUnit unit{"A.app", SourceKind::kAppConfig,
                  "application A { generators g; bindings map A.x to I, map A.x to J; }"};
  auto result = parse_app_config(unit);
  ASSERT_EQ(result.diagnostics.size(), 1u);
  EXPECT_EQ(result.diagnostics[0].code, "DUPLICATE");
}

TEST(ParserTest, UnterminatedStringAndComment) {
  auto text = parse_architecture(arc_unit("A", "component A { \"abc"));
  ASSERT_EQ(text.diagnostics.size(), 1u);
  EXPECT_EQ(text.diagnostics[0].code, "SYNTAX");
  auto comment = parse_architecture(arc_unit("A", "component A { /* never closed"));
  ASSERT_EQ(comment.diagnostics.size(), 1u);
  EXPECT_EQ(comment.diagnostics[0].code, "SYNTAX");
}

TEST(ParserTest, KindForExtensions) {
  EXPECT_EQ(SourceUnit::kind_for("a/B.arc"), SourceKind::kArchitecture);
  EXPECT_EQ(SourceUnit::kind_for("B.cd"), SourceKind::kClassDiagram);
  EXPECT_EQ(SourceUnit::kind_for("B.app"), SourceKind::kAppConfig);
  EXPECT_EQ(SourceUnit::kind_for("B.lib"), SourceKind::kLibProps);
  EXPECT_EQ(SourceUnit::kind_for("B.txt"), std::nullopt);
}

TEST(ParserTest, ReadSourceMissingFileThrows) {
  try {
    read_source("does/not/exist.arc");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIoError);
  }
}

// Printing and reparsing yields a structurally equal AST for every fixture.
class RoundTripTest : public ::testing::TestWithParam<std::string> {};

TEST_P(RoundTripTest, PrintThenParseIsIdentity) {
  auto unit = read_source(GetParam());
  switch (unit.kind) {
    case SourceKind::kArchitecture: {
      auto first = parse_architecture(unit);
      ASSERT_TRUE(first.ok());
      unit.text = print(*first.value);
      auto second = parse_architecture(unit);
      ASSERT_TRUE(second.ok()) << unit.text << render(second.diagnostics);
      EXPECT_EQ(*first.value, *second.value);
      EXPECT_EQ(print(*second.value), unit.text);
      break;
    }
    case SourceKind::kClassDiagram: {
      auto first = parse_class_diagram(unit);
      ASSERT_TRUE(first.ok());
      unit.text = print(*first.value);
      auto second = parse_class_diagram(unit);
      ASSERT_TRUE(second.ok()) << unit.text;
      EXPECT_EQ(*first.value, *second.value);
      break;
    }
    case SourceKind::kAppConfig: {
      auto first = parse_app_config(unit);
      ASSERT_TRUE(first.ok());
      unit.text = print(*first.value);
      auto second = parse_app_config(unit);
      ASSERT_TRUE(second.ok()) << unit.text;
      EXPECT_EQ(*first.value, *second.value);
      break;
    }
    case SourceKind::kLibProps: {
      auto first = parse_lib_props(unit);
      ASSERT_TRUE(first.ok());
      unit.text = print(*first.value);
      auto second = parse_lib_props(unit);
      ASSERT_TRUE(second.ok()) << unit.text;
      EXPECT_EQ(*first.value, *second.value);
      break;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(
    Fixtures, RoundTripTest,
    ::testing::Values("fixtures/bumperbot/BumperBot.arc", "fixtures/bumperbot/BumpControl.arc",
                      "fixtures/bumperbot/SenseActModels/Timer.arc",
                      "fixtures/bumperbot/SenseActModels/MotorCommands.cd",
                      "fixtures/apps/nxt-java.app", "fixtures/apps/sim.app",
                      "fixtures/libs/SimStubs.lib", "fixtures/libs/NXTJava.lib",
                      "fixtures/negative/cc12/models/Types.cd"));

TEST(ParserTest, OriginsDoNotAffectEquality) {
  auto a = test::arc("component A { port in Integer x; }");
  auto b = test::arc("component A {\n\n     port in Integer\n x;\n}");
  EXPECT_EQ(a, b);
  auto c = test::arc("component A { port in Integer y; }");
  EXPECT_NE(a, c);
}

TEST(ParserTest, DanglingArrowIsReportedAtTheArrow) {
  auto result = parse_architecture(arc_unit("A", "component A {\n  connect sensor.data -> ;\n}\n"));
  ASSERT_EQ(result.diagnostics.size(), 1u);
  EXPECT_EQ(first_diagnostic(result.diagnostics),
            "error SYNTAX A.arc:2:23 dangling '->' without a target port");
}

TEST(ParserTest, EmptyBindingsClauseIsRejected) {
  SourceUnit unit{"A.app", SourceKind::kAppConfig, "application A { generators g; bindings ; }"};
  auto result = parse_app_config(unit);
  EXPECT_FALSE(result.value.has_value());
  ASSERT_EQ(result.diagnostics.size(), 1u);
  EXPECT_EQ(result.diagnostics[0].code, "SYNTAX");
}

int line_count(std::string_view text) {
  return 1 + static_cast<int>(std::count(text.begin(), text.end(), '\n'));
}

// Every prefix of a valid fixture either parses or yields a diagnostic inside the prefix.
TEST(ParserTest, DiagnosticsStayWithinSourceBounds) {
  for (const char* file : {"fixtures/bumperbot/BumpControl.arc", "fixtures/apps/sim.app",
                           "fixtures/libs/SimStubs.lib",
                           "fixtures/bumperbot/SenseActModels/MotorCommands.cd"}) {
    auto full = read_source(file);
    for (std::size_t cut = 0; cut <= full.text.size(); ++cut) {
      SourceUnit unit = full;
      unit.text = full.text.substr(0, cut);
      std::vector<Diagnostic> diagnostics;
      switch (unit.kind) {
        case SourceKind::kArchitecture: diagnostics = parse_architecture(unit).diagnostics; break;
        case SourceKind::kClassDiagram: diagnostics = parse_class_diagram(unit).diagnostics; break;
        case SourceKind::kAppConfig: diagnostics = parse_app_config(unit).diagnostics; break;
        case SourceKind::kLibProps: diagnostics = parse_lib_props(unit).diagnostics; break;
      }
      for (const auto& d : diagnostics) {
        ASSERT_GE(d.location.line, 1) << file << " cut " << cut;
        ASSERT_LE(d.location.line, line_count(unit.text)) << file << " cut " << cut;
        ASSERT_GE(d.location.column, 1) << file << " cut " << cut;
      }
    }
  }
}

}  // namespace
}  // namespace macc
