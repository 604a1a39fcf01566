#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "macc/instance.hpp"
#include "macc/model.hpp"

namespace macc {

// The RTE identifier code libraries for the simulator must declare.
inline constexpr std::string_view kSimulationRte = "sim";

// ---------------------------------------------------------------------------
// Scenario

// A raw scenario value; typed against its port when the runtime is built.
// monostate is JSON null (absent).
using ScenarioValue = std::variant<std::monostate, std::int64_t, double, bool, std::string>;

struct TableRow {
  std::map<std::string, ScenarioValue> when;  // in-port -> expected message
  std::map<std::string, ScenarioValue> emit;  // out-port -> produced message
};

struct Scenario {
  std::int64_t steps = 0;
  // instance -> out-port -> value per step; shorter lists pad with absent
  std::map<std::string, std::map<std::string, std::vector<ScenarioValue>>> scripts;
  // instance -> rows for `table` stubs, first match wins
  std::map<std::string, std::vector<TableRow>> tables;
};

// `{"steps": N, "scripts": {...}, "tables": {...}}`. Throws Error(kInvalidScenario).
Scenario parse_scenario(std::string_view json_text);
Scenario load_scenario(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Trace

using Message = std::optional<Literal>;
using PortValues = std::map<std::string, Message>;

struct StepRecord {
  std::int64_t step = 0;
  std::map<std::string, PortValues> instances;  // every port of every atomic instance

  friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

struct SimulationTrace {
  std::vector<StepRecord> steps;

  friend bool operator==(const SimulationTrace&, const SimulationTrace&) = default;
};

// One JSON object per line, keys sorted: {"outputs":{...},"step":t}
std::string serialize_step(const StepRecord& record);
std::string serialize_trace(const SimulationTrace& trace);

// ---------------------------------------------------------------------------
// Runtime

enum class RuntimeKind { kAutomaton, kScript, kRecord, kTable, kTimer };

struct RecordedMessage {
  std::int64_t step = 0;
  std::string port;
  Literal value;

  friend bool operator==(const RecordedMessage&, const RecordedMessage&) = default;
};

struct InstanceState {
  std::string qualified_name;
  std::string type_name;
  std::vector<Port> ports;
  std::vector<DataTypeRef> port_types;  // parallel to `ports`
  RuntimeKind kind = RuntimeKind::kAutomaton;

  std::optional<Automaton> automaton;  // literals normalized against port types
  std::string current_state;

  std::vector<PortValues> script;  // per step, out-ports only

  struct Row {
    std::map<std::string, Literal> when;
    std::map<std::string, Literal> emit;
  };
  std::vector<Row> table;

  std::int64_t timer_period = 0;
  std::optional<std::int64_t> timer_due;

  std::vector<RecordedMessage> recording;
};

struct RuntimeState {
  std::vector<InstanceState> instances;  // pre-order of the instance tree
  std::map<Endpoint, Endpoint> drivers;  // atomic in-port -> atomic out-port
  std::map<Endpoint, Literal> previous_outputs;  // messages sent in the last step
  std::int64_t next_step = 0;
  std::int64_t steps = 0;
  SimulationTrace trace;

  const InstanceState* find(std::string_view qualified_name) const;
};

// Builds the flattened runtime. Every abstract instance must be bound to an
// implementation of RTE `sim` with a stub kind (script, record, table,
// timer(n)). Throws Error with kRteMismatch, kMissingScript,
// kUnsupportedStub, kInvalidScenario, kConflictingDrivers.
RuntimeState init_runtime(const InstanceTree& bound_tree, const ArchitectureModel& model,
                          const Scenario& scenario);

// Advances one time step. Inputs at step t are the messages sent at t-1 (all
// absent at step 0). `evaluation_order` optionally permutes the order in which
// instances are evaluated; results do not depend on it. Throws
// Error(kTypeFault) when a produced value does not match its port type.
RuntimeState step(const RuntimeState& state, std::span<const std::size_t> evaluation_order = {});

SimulationTrace run(const InstanceTree& bound_tree, const ArchitectureModel& model,
                    const Scenario& scenario);

}  // namespace macc
