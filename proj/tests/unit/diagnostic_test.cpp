#include <gtest/gtest.h>

#include "macc/diagnostic.hpp"

namespace macc {
namespace {

TEST(DiagnosticTest, RendersOneLine) {
  EXPECT_EQ(render(make_error("CC4", {"m/Sys.arc", 4, 24}, "type mismatch")),
            "error CC4 m/Sys.arc:4:24 type mismatch");
  EXPECT_EQ(render(make_warning("CC5", {"S.arc", 1, 2}, "unused")), "warning CC5 S.arc:1:2 unused");
}

TEST(DiagnosticTest, SortsByLocationThenNumericCode) {
  std::vector<Diagnostic> diagnostics = {
      make_error("CC10", {"b.app", 1, 1}, "x"),
      make_error("CC9", {"b.app", 1, 1}, "x"),
      make_error("CC2", {"a.arc", 3, 5}, "x"),
      make_error("CC1", {"a.arc", 3, 1}, "x"),
      make_error("SYNTAX", {"a.arc", 1, 9}, "x"),
  };
  sort_diagnostics(diagnostics);
  std::vector<std::string> codes;
  for (const auto& d : diagnostics) codes.push_back(d.code);
  EXPECT_EQ(codes, (std::vector<std::string>{"SYNTAX", "CC1", "CC2", "CC9", "CC10"}));
}

TEST(DiagnosticTest, WarningsAreNotErrors) {
  std::vector<Diagnostic> diagnostics = {make_warning("CC5", {"a", 1, 1}, "w")};
  EXPECT_FALSE(has_errors(diagnostics));
  diagnostics.push_back(make_error("CC5", {"a", 1, 1}, "e"));
  EXPECT_TRUE(has_errors(diagnostics));
  EXPECT_EQ(render(diagnostics), "warning CC5 a:1:1 w\nerror CC5 a:1:1 e\n");
}

}  // namespace
}  // namespace macc
