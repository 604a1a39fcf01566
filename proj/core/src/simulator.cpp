#include "macc/simulator.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "macc/error.hpp"

namespace macc {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Scenario

namespace {

[[noreturn]] void invalid(const std::string& message) {
  throw Error(ErrorCode::kInvalidScenario, message);
}

ScenarioValue to_scenario_value(const json& value, const std::string& where) {
  if (value.is_null()) return std::monostate{};
  if (value.is_boolean()) return value.get<bool>();
  if (value.is_number_integer()) {
    if (value.is_number_unsigned() &&
        value.get<std::uint64_t>() > std::uint64_t(std::numeric_limits<std::int64_t>::max())) {
      invalid(where + ": integer out of range");
    }
    return value.get<std::int64_t>();
  }
  if (value.is_number_float()) return value.get<double>();
  if (value.is_string()) return value.get<std::string>();
  invalid(where + ": expected a number, boolean, string or null");
}

std::map<std::string, ScenarioValue> port_map(const json& object, const std::string& where) {
  if (!object.is_object()) invalid(where + ": expected an object");
  std::map<std::string, ScenarioValue> out;
  for (const auto& [port, value] : object.items()) {
    out[port] = to_scenario_value(value, where + "." + port);
  }
  return out;
}

}  // namespace

Scenario parse_scenario(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    invalid(e.what());
  }
  if (!root.is_object()) invalid("scenario must be a JSON object");
  for (const auto& [key, _] : root.items()) {
    if (key != "steps" && key != "scripts" && key != "tables") invalid("unknown key '" + key + "'");
  }

  Scenario scenario;
  if (!root.contains("steps") || !root["steps"].is_number_integer()) {
    invalid("'steps' must be an integer");
  }
  scenario.steps = root["steps"].get<std::int64_t>();
  if (scenario.steps < 0) invalid("'steps' must not be negative");

  if (root.contains("scripts")) {
    const auto& scripts = root["scripts"];
    if (!scripts.is_object()) invalid("'scripts' must be an object");
    for (const auto& [instance, ports] : scripts.items()) {
      if (!ports.is_object()) invalid("script for '" + instance + "' must be an object");
      auto& script = scenario.scripts[instance];
      for (const auto& [port, values] : ports.items()) {
        if (!values.is_array()) invalid("script '" + instance + "." + port + "' must be an array");
        auto& list = script[port];
        for (const auto& value : values) {
          list.push_back(to_scenario_value(value, instance + "." + port));
        }
      }
    }
  }

  if (root.contains("tables")) {
    const auto& tables = root["tables"];
    if (!tables.is_object()) invalid("'tables' must be an object");
    for (const auto& [instance, rows] : tables.items()) {
      if (!rows.is_array()) invalid("table for '" + instance + "' must be an array");
      auto& table = scenario.tables[instance];
      for (const auto& row : rows) {
        if (!row.is_object()) invalid("table rows for '" + instance + "' must be objects");
        TableRow parsed;
        for (const auto& [key, _] : row.items()) {
          if (key != "when" && key != "emit") invalid("unknown table row key '" + key + "'");
        }
        if (row.contains("when")) parsed.when = port_map(row["when"], instance);
        if (row.contains("emit")) parsed.emit = port_map(row["emit"], instance);
        table.push_back(std::move(parsed));
      }
    }
  }
  return scenario;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_scenario(text.str());
}

// ---------------------------------------------------------------------------
// Trace

namespace {

json literal_to_json(const Literal& literal) {
  struct Converter {
    json operator()(std::int64_t v) const { return v; }
    json operator()(bool v) const { return v; }
    json operator()(const std::string& v) const { return v; }
    json operator()(double v) const { return v; }
    json operator()(const EnumValue& v) const { return v.enum_name + "." + v.literal; }
  };
  return std::visit(Converter{}, literal);
}

}  // namespace

std::string serialize_step(const StepRecord& record) {
  json outputs = json::object();
  for (const auto& [instance, ports] : record.instances) {
    json values = json::object();
    for (const auto& [port, message] : ports) {
      values[port] = message ? literal_to_json(*message) : json(nullptr);
    }
    outputs[instance] = std::move(values);
  }
  json line = {{"step", record.step}, {"outputs", std::move(outputs)}};
  return line.dump();
}

std::string serialize_trace(const SimulationTrace& trace) {
  std::string out;
  for (const auto& record : trace.steps) {
    out += serialize_step(record);
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Runtime

const InstanceState* RuntimeState::find(std::string_view qualified_name) const {
  for (const auto& instance : instances) {
    if (instance.qualified_name == qualified_name) return &instance;
  }
  return nullptr;
}

namespace {

std::string describe(const ScenarioValue& value) {
  struct Printer {
    std::string operator()(std::monostate) const { return "null"; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return literal_to_source(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& v) const { return "\"" + v + "\""; }
  };
  return std::visit(Printer{}, value);
}

// Types a raw scenario value against a port. Enum values are written
// "Enum.LITERAL" (a bare "LITERAL" is accepted as well).
Message type_value(const ScenarioValue& value, const DataTypeRef& type,
                   const ArchitectureModel& model, const std::string& where) {
  if (std::holds_alternative<std::monostate>(value)) return std::nullopt;
  std::optional<Literal> candidate;
  if (type.kind == TypeKind::kEnum) {
    if (const auto* text = std::get_if<std::string>(&value)) {
      auto dot = text->find('.');
      candidate = dot == std::string::npos ? EnumValue{"", *text}
                                           : EnumValue{text->substr(0, dot), text->substr(dot + 1)};
    }
  } else if (type.kind == TypeKind::kBuiltin) {
    switch (*builtin_from_name(type.name)) {
      case Builtin::kInteger:
        if (const auto* v = std::get_if<std::int64_t>(&value)) candidate = *v;
        break;
      case Builtin::kDouble:
        if (const auto* v = std::get_if<std::int64_t>(&value)) candidate = double(*v);
        if (const auto* v = std::get_if<double>(&value)) candidate = *v;
        break;
      case Builtin::kBoolean:
        if (const auto* v = std::get_if<bool>(&value)) candidate = *v;
        break;
      case Builtin::kString:
        if (const auto* v = std::get_if<std::string>(&value)) candidate = *v;
        break;
    }
  }
  if (candidate) {
    if (auto fitted = fit_literal(*candidate, type, model)) return fitted;
  }
  invalid(where + ": value " + describe(value) + " does not match type " + type.name);
}

struct PortIndex {
  const Port* port;
  const DataTypeRef* type;
};

std::optional<PortIndex> lookup_port(const InstanceState& instance, std::string_view name) {
  for (std::size_t i = 0; i < instance.ports.size(); ++i) {
    if (instance.ports[i].name == name) return PortIndex{&instance.ports[i], &instance.port_types[i]};
  }
  return std::nullopt;
}

std::map<std::string, Literal> type_row(const std::map<std::string, ScenarioValue>& raw,
                                        const InstanceState& instance, Direction direction,
                                        const ArchitectureModel& model) {
  std::map<std::string, Literal> typed;
  for (const auto& [port_name, value] : raw) {
    std::string where = instance.qualified_name + "." + port_name;
    auto port = lookup_port(instance, port_name);
    if (!port || port->port->direction != direction) {
      invalid("table row refers to " + std::string(direction == Direction::kIn ? "in" : "out") +
              "-port '" + where + "' which does not exist");
    }
    auto message = type_value(value, *port->type, model, where);
    if (message) typed[port_name] = *message;
  }
  return typed;
}

std::string first_port(const InstanceState& instance, Direction direction) {
  for (const auto& port : instance.ports) {
    if (port.direction == direction) return port.name;
  }
  return {};
}

void setup_timer(InstanceState& instance, const StubKind& kind, const ArchitectureModel& model) {
  if (!kind.parameter || *kind.parameter <= 0) {
    throw Error(ErrorCode::kUnsupportedStub,
                instance.qualified_name + ": timer needs a positive period, e.g. timer(2)");
  }
  std::size_t ins = 0, outs = 0;
  for (std::size_t i = 0; i < instance.ports.size(); ++i) {
    bool in = instance.ports[i].direction == Direction::kIn;
    (in ? ins : outs)++;
    const auto& type = instance.port_types[i];
    const auto* decl = type.kind == TypeKind::kEnum ? model.find_enum(type.name) : nullptr;
    if (!decl || !decl->has_literal(in ? "START" : "ALERT")) {
      throw Error(ErrorCode::kUnsupportedStub,
                  instance.qualified_name + ": timer ports must be enums with literal " +
                      (in ? "START" : "ALERT"));
    }
  }
  if (ins != 1 || outs != 1) {
    throw Error(ErrorCode::kUnsupportedStub,
                instance.qualified_name + ": timer needs exactly one in-port and one out-port");
  }
  instance.timer_period = *kind.parameter;
}

bool compare(const Literal& message, CompareOp op, const Literal& literal) {
  if (message.index() != literal.index()) return false;
  if (op == CompareOp::kEq) return message == literal;
  if (op == CompareOp::kNe) return message != literal;
  auto ordered = [op](auto a, auto b) {
    switch (op) {
      case CompareOp::kLt: return a < b;
      case CompareOp::kGt: return a > b;
      case CompareOp::kLe: return a <= b;
      case CompareOp::kGe: return a >= b;
      default: return false;
    }
  };
  if (const auto* a = std::get_if<std::int64_t>(&message)) {
    return ordered(*a, std::get<std::int64_t>(literal));
  }
  if (const auto* a = std::get_if<double>(&message)) return ordered(*a, std::get<double>(literal));
  return false;
}

// Mutates `state` in place; step() and run() share it.
void advance(RuntimeState& state, std::span<const std::size_t> evaluation_order,
             const ArchitectureModel* model_for_checks) {
  const std::int64_t t = state.next_step;
  std::vector<std::size_t> order(evaluation_order.begin(), evaluation_order.end());
  if (order.empty()) {
    order.resize(state.instances.size());
    std::iota(order.begin(), order.end(), 0);
  } else {
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] != i || sorted.size() != state.instances.size()) {
        throw std::invalid_argument("evaluation order is not a permutation of the instances");
      }
    }
  }

  std::map<Endpoint, Literal> sent;
  StepRecord record{t, {}};

  for (std::size_t index : order) {
    InstanceState& instance = state.instances[index];
    PortValues inputs;
    PortValues outputs;
    for (const auto& port : instance.ports) {
      if (port.direction == Direction::kOut) {
        outputs[port.name] = std::nullopt;
        continue;
      }
      Message message;
      auto driver = state.drivers.find({instance.qualified_name, port.name});
      if (driver != state.drivers.end()) {
        auto it = state.previous_outputs.find(driver->second);
        if (it != state.previous_outputs.end()) message = it->second;
      }
      inputs[port.name] = std::move(message);
    }

    auto assign = [&](const std::vector<Assignment>& actions) {
      for (const auto& action : actions) outputs[action.port] = action.literal;
    };

    switch (instance.kind) {
      case RuntimeKind::kAutomaton: {
        const Automaton& automaton = *instance.automaton;
        if (t == 0) {
          assign(automaton.initial_actions);
          break;
        }
        for (const auto& transition : automaton.transitions) {
          if (transition.source != instance.current_state) continue;
          bool enabled = std::all_of(
              transition.guard.begin(), transition.guard.end(), [&](const GuardAtom& atom) {
                const auto& message = inputs[atom.port];
                return message && compare(*message, atom.op, atom.literal);
              });
          if (!enabled) continue;
          instance.current_state = transition.target;
          assign(transition.actions);
          break;
        }
        break;
      }
      case RuntimeKind::kScript:
        if (t < std::int64_t(instance.script.size())) {
          for (const auto& [port, message] : instance.script[t]) outputs[port] = message;
        }
        break;
      case RuntimeKind::kRecord:
        for (const auto& [port, message] : inputs) {
          if (message) instance.recording.push_back({t, port, *message});
        }
        break;
      case RuntimeKind::kTable:
        for (const auto& row : instance.table) {
          bool match = std::all_of(row.when.begin(), row.when.end(), [&](const auto& entry) {
            const auto& message = inputs[entry.first];
            return message && *message == entry.second;
          });
          if (!match) continue;
          for (const auto& [port, value] : row.emit) outputs[port] = value;
          break;
        }
        break;
      case RuntimeKind::kTimer: {
        const auto& in = inputs.begin()->second;
        if (in) {
          const auto* value = std::get_if<EnumValue>(&*in);
          if (value && value->literal == "START") instance.timer_due = t + instance.timer_period - 1;
        }
        if (instance.timer_due && *instance.timer_due == t) {
          std::string out_port = first_port(instance, Direction::kOut);
          const auto& type = *lookup_port(instance, out_port)->type;
          outputs[out_port] = EnumValue{type.name, "ALERT"};
          instance.timer_due.reset();
        }
        break;
      }
    }

    auto& traced = record.instances[instance.qualified_name];
    for (auto& [port, message] : outputs) {
      if (message) {
        auto index_port = lookup_port(instance, port);
        if (!index_port || index_port->port->direction != Direction::kOut ||
            (model_for_checks && !fit_literal(*message, *index_port->type, *model_for_checks))) {
          throw Error(ErrorCode::kTypeFault, instance.qualified_name + "." + port +
                                                 " produced " + literal_to_source(*message));
        }
        sent[{instance.qualified_name, port}] = *message;
      }
      traced[port] = message;
    }
    for (auto& [port, message] : inputs) traced[port] = std::move(message);
  }

  state.previous_outputs = std::move(sent);
  state.next_step = t + 1;
  state.trace.steps.push_back(std::move(record));
}

}  // namespace

RuntimeState init_runtime(const InstanceTree& bound_tree, const ArchitectureModel& model,
                          const Scenario& scenario) {
  auto flat = flatten(bound_tree, model);
  RuntimeState state;
  state.steps = scenario.steps;
  for (const auto& wire : flat.wires) {
    if (!state.drivers.emplace(wire.target, wire.source).second) {
      throw Error(ErrorCode::kConflictingDrivers, wire.target.to_string() + " has several drivers");
    }
  }

  std::set<std::string> scripted;
  std::set<std::string> tabled;
  for (const auto& atomic : flat.instances) {
    InstanceState instance;
    instance.qualified_name = atomic.qualified_name;
    instance.type_name = atomic.type_name;
    const auto* type = model.find_component(atomic.type_name);
    instance.ports = type->ports;
    for (const auto& port : instance.ports) {
      auto resolved = model.resolve_type(port.type_name);
      if (!resolved) {
        throw Error(ErrorCode::kTypeFault, atomic.qualified_name + "." + port.name +
                                               " has unknown type " + port.type_name);
      }
      instance.port_types.push_back(*resolved);
    }

    if (atomic.classification == Classification::kFullyModeled) {
      instance.kind = RuntimeKind::kAutomaton;
      Automaton automaton = *type->behavior;
      auto normalize = [&](const std::string& port_name, Literal& literal) {
        auto port = lookup_port(instance, port_name);
        std::optional<Literal> fitted;
        if (port) fitted = fit_literal(literal, *port->type, model);
        if (!fitted) {
          throw Error(ErrorCode::kTypeFault, atomic.qualified_name + ": literal " +
                                                 literal_to_source(literal) + " for port " +
                                                 port_name + " does not type-check");
        }
        literal = std::move(*fitted);
      };
      for (auto& action : automaton.initial_actions) normalize(action.port, action.literal);
      for (auto& transition : automaton.transitions) {
        for (auto& atom : transition.guard) normalize(atom.port, atom.literal);
        for (auto& action : transition.actions) normalize(action.port, action.literal);
      }
      instance.current_state = automaton.initial_state;
      instance.automaton = std::move(automaton);
      state.instances.push_back(std::move(instance));
      continue;
    }

    if (!atomic.binding) {
      throw Error(ErrorCode::kUnboundInstance, atomic.qualified_name);
    }
    const auto& binding = *atomic.binding;
    if (binding.rte != kSimulationRte) {
      throw Error(ErrorCode::kRteMismatch, atomic.qualified_name + " is bound to " +
                                               binding.qualified() + " of RTE '" + binding.rte +
                                               "', the simulator needs RTE 'sim'");
    }
    if (!binding.kind) {
      throw Error(ErrorCode::kUnsupportedStub,
                  binding.qualified() + " declares no stub kind");
    }
    const auto& kind = *binding.kind;
    if (kind.name == "script") {
      instance.kind = RuntimeKind::kScript;
      auto it = scenario.scripts.find(atomic.qualified_name);
      if (it == scenario.scripts.end()) {
        throw Error(ErrorCode::kMissingScript, "no script for " + atomic.qualified_name);
      }
      scripted.insert(atomic.qualified_name);
      instance.script.resize(std::size_t(scenario.steps));
      for (const auto& [port_name, values] : it->second) {
        std::string where = atomic.qualified_name + "." + port_name;
        auto port = lookup_port(instance, port_name);
        if (!port || port->port->direction != Direction::kOut) {
          invalid("script for '" + where + "' does not name an out-port");
        }
        for (std::size_t t = 0; t < instance.script.size(); ++t) {
          instance.script[t][port_name] =
              t < values.size() ? type_value(values[t], *port->type, model, where) : std::nullopt;
        }
      }
    } else if (kind.name == "record") {
      instance.kind = RuntimeKind::kRecord;
    } else if (kind.name == "table") {
      instance.kind = RuntimeKind::kTable;
      auto it = scenario.tables.find(atomic.qualified_name);
      if (it == scenario.tables.end()) {
        throw Error(ErrorCode::kMissingScript, "no table rows for " + atomic.qualified_name);
      }
      tabled.insert(atomic.qualified_name);
      for (const auto& row : it->second) {
        instance.table.push_back({type_row(row.when, instance, Direction::kIn, model),
                                  type_row(row.emit, instance, Direction::kOut, model)});
      }
    } else if (kind.name == "timer") {
      instance.kind = RuntimeKind::kTimer;
      setup_timer(instance, kind, model);
    } else {
      throw Error(ErrorCode::kUnsupportedStub,
                  binding.qualified() + " has unknown stub kind '" + kind.name + "'");
    }
    state.instances.push_back(std::move(instance));
  }

  for (const auto& [name, _] : scenario.scripts) {
    if (!scripted.contains(name)) invalid("'" + name + "' is not bound to a script stub");
  }
  for (const auto& [name, _] : scenario.tables) {
    if (!tabled.contains(name)) invalid("'" + name + "' is not bound to a table stub");
  }
  return state;
}

RuntimeState step(const RuntimeState& state, std::span<const std::size_t> evaluation_order) {
  RuntimeState next = state;
  advance(next, evaluation_order, nullptr);
  return next;
}

SimulationTrace run(const InstanceTree& bound_tree, const ArchitectureModel& model,
                    const Scenario& scenario) {
  RuntimeState state = init_runtime(bound_tree, model, scenario);
  for (std::int64_t t = 0; t < state.steps; ++t) advance(state, {}, &model);
  return std::move(state.trace);
}

}  // namespace macc
