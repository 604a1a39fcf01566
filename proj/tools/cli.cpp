#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "macc/binding.hpp"
#include "macc/codegen.hpp"
#include "macc/error.hpp"
#include "macc/parser.hpp"
#include "macc/simulator.hpp"
#include "macc/wellformedness.hpp"
#include "macc/workspace.hpp"

namespace macc::cli {

namespace fs = std::filesystem;

namespace {

enum class Command { kCheck, kBind, kGenerate, kSimulate };

struct Invocation {
  Command command = Command::kCheck;
  std::vector<std::string> model_paths;
  std::vector<std::string> library_paths;
  std::string root;
  std::string app;
  std::string out_dir;
  std::string scenario;
  std::string trace;
  std::optional<std::int64_t> steps;
};

// Signals that diagnostics with errors were printed.
struct Stop {
  int exit_code;
};

class Pipeline {
 public:
  Pipeline(const Invocation& invocation, std::ostream& out, std::ostream& err)
      : inv_(invocation), out_(out), err_(err) {}

  int run() {
    try {
      check();
      if (inv_.command == Command::kCheck) return kExitOk;
      bind();
      if (inv_.command == Command::kBind) {
        out_ << render_binding_table(binding_table(bound_));
      } else if (inv_.command == Command::kGenerate) {
        generate();
      } else {
        simulate();
      }
      return kExitOk;
    } catch (const Stop& stop) {
      return stop.exit_code;
    } catch (const Error& e) {
      err_ << "error " << e.what() << "\n";
      return is_io(e.code()) ? kExitIo : kExitModelError;
    }
  }

 private:
  static bool is_io(ErrorCode code) {
    return code == ErrorCode::kIoError || code == ErrorCode::kWriteError;
  }

  void report(std::vector<Diagnostic> diagnostics) {
    sort_diagnostics(diagnostics);
    err_ << render(diagnostics);
    if (!has_errors(diagnostics)) return;
    for (const auto& d : diagnostics) {
      if (d.severity == Severity::kError && d.code == "IO") throw Stop{kExitIo};
    }
    throw Stop{kExitModelError};
  }

  void check() {
    std::vector<fs::path> models(inv_.model_paths.begin(), inv_.model_paths.end());
    std::vector<fs::path> libs(inv_.library_paths.begin(), inv_.library_paths.end());
    ws_ = load_workspace(models, libs);
    report(ws_.diagnostics);
    report(check_architecture(ws_.model, inv_.root).diagnostics);
  }

  void bind() {
    auto parsed = parse_app_config(read_source(inv_.app));
    report(parsed.diagnostics);
    config_ = std::move(*parsed.value);

    auto tree = instantiate(ws_.model, inv_.root);
    BindingCheckOptions options;
    options.check_generators = inv_.command != Command::kSimulate;
    report(check_binding(tree, config_, ws_.libraries, registry(), options).diagnostics);
    bound_ = apply_binding(tree, config_, ws_.libraries);
  }

  void generate() {
    auto files = orchestrate(bound_, ws_.model, config_, inv_.out_dir);
    for (const auto& file : files.files) {
      out_ << (fs::path(inv_.out_dir) / file.path).generic_string() << "\n";
    }
  }

  void simulate() {
    Scenario scenario = load_scenario(inv_.scenario);
    if (inv_.steps) scenario.steps = *inv_.steps;
    std::string text = serialize_trace(macc::run(bound_, ws_.model, scenario));
    if (inv_.trace.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(inv_.trace, std::ios::binary | std::ios::trunc);
    file << text;
    file.close();
    if (!file) throw Error(ErrorCode::kWriteError, "cannot write " + inv_.trace);
    out_ << inv_.trace << "\n";
  }

  const Invocation& inv_;
  std::ostream& out_;
  std::ostream& err_;
  Workspace ws_;
  ApplicationConfiguration config_;
  InstanceTree bound_;
};

constexpr const char* kSimulateHelp =
    "Run the time-synchronous simulator and write a JSON-lines trace.\n"
    "The generators clause of the application configuration is ignored;\n"
    "every abstract instance must be bound to an implementation of RTE 'sim'\n"
    "with a stub kind (script, record, table, timer(n)).";

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Architecture modeling toolchain: check, bind, generate, simulate", "macc"};
  app.require_subcommand(1);

  Invocation inv;
  auto add_models = [&](CLI::App* sub) {
    sub->add_option("--models", inv.model_paths, "Model path (repeatable)")->required();
    sub->add_option("--root", inv.root, "Root component type")->required();
  };
  auto add_binding = [&](CLI::App* sub) {
    sub->add_option("--libs", inv.library_paths, "Code library path (repeatable)");
    sub->add_option("--app", inv.app, "Application configuration file")->required();
  };

  auto* check = app.add_subcommand("check", "Load models and check the architecture");
  add_models(check);
  check->add_option("--libs", inv.library_paths, "Code library path (repeatable)");

  auto* bind = app.add_subcommand("bind", "Check the bindings and print the binding table");
  add_models(bind);
  add_binding(bind);

  auto* generate = app.add_subcommand("generate", "Generate code into an output directory");
  add_models(generate);
  add_binding(generate);
  generate->add_option("--out", inv.out_dir, "Output directory")->required();

  auto* simulate = app.add_subcommand("simulate", kSimulateHelp);
  add_models(simulate);
  add_binding(simulate);
  simulate->add_option("--scenario", inv.scenario, "Scenario JSON file")->required();
  simulate->add_option("--trace", inv.trace, "Trace output file (default: stdout)");
  std::int64_t steps = 0;
  auto* steps_option =
      simulate->add_option("--steps", steps, "Override the scenario step count")
          ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  if (check->parsed()) inv.command = Command::kCheck;
  if (bind->parsed()) inv.command = Command::kBind;
  if (generate->parsed()) inv.command = Command::kGenerate;
  if (simulate->parsed()) {
    inv.command = Command::kSimulate;
    if (steps_option->count() > 0) inv.steps = steps;
  }
  return Pipeline(inv, out, err).run();
}

}  // namespace macc::cli
