// Run from the source directory so the fixture paths resolve.
#include <benchmark/benchmark.h>

#include <filesystem>
#include <vector>

#include "macc/binding.hpp"
#include "macc/codegen.hpp"
#include "macc/parser.hpp"
#include "macc/simulator.hpp"
#include "macc/wellformedness.hpp"
#include "macc/workspace.hpp"

namespace {

namespace fs = std::filesystem;

struct Loaded {
  macc::Workspace ws;
  macc::ApplicationConfiguration sim;
  macc::ApplicationConfiguration nxt;
};

const Loaded& loaded() {
  static const Loaded kLoaded = [] {
    std::vector<fs::path> models = {"fixtures/bumperbot"};
    std::vector<fs::path> libs = {"fixtures/libs"};
    Loaded l{macc::load_workspace(models, libs), {}, {}};
    l.sim = *macc::parse_app_config(macc::read_source("fixtures/apps/sim.app")).value;
    l.nxt = *macc::parse_app_config(macc::read_source("fixtures/apps/nxt-a.app")).value;
    return l;
  }();
  return kLoaded;
}

void BM_ParseAutomaton(benchmark::State& state) {
  auto unit = macc::read_source("fixtures/bumperbot/BumpControl.arc");
  for (auto _ : state) benchmark::DoNotOptimize(macc::parse_architecture(unit));
}
BENCHMARK(BM_ParseAutomaton);

void BM_LoadWorkspace(benchmark::State& state) {
  std::vector<fs::path> models = {"fixtures/bumperbot"};
  std::vector<fs::path> libs = {"fixtures/libs"};
  for (auto _ : state) benchmark::DoNotOptimize(macc::load_workspace(models, libs));
}
BENCHMARK(BM_LoadWorkspace);

void BM_CheckArchitecture(benchmark::State& state) {
  const auto& l = loaded();
  for (auto _ : state) benchmark::DoNotOptimize(macc::check_architecture(l.ws.model, "BumperBot"));
}
BENCHMARK(BM_CheckArchitecture);

void BM_Generate(benchmark::State& state) {
  const auto& l = loaded();
  auto tree = macc::apply_binding(macc::instantiate(l.ws.model, "BumperBot"), l.nxt, l.ws.libraries);
  for (auto _ : state) benchmark::DoNotOptimize(macc::generate(tree, l.ws.model, l.nxt));
}
BENCHMARK(BM_Generate);

void BM_Simulate(benchmark::State& state) {
  const auto& l = loaded();
  auto tree = macc::apply_binding(macc::instantiate(l.ws.model, "BumperBot"), l.sim, l.ws.libraries);
  auto scenario = macc::load_scenario("fixtures/bumperbot/scenario.json");
  scenario.steps = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(macc::run(tree, l.ws.model, scenario));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Simulate)->Arg(10)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
