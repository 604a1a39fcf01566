#include "macc/model.hpp"

#include <algorithm>
#include <charconv>

namespace macc {

std::optional<Builtin> builtin_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kBuiltinNames.size(); ++i) {
    if (kBuiltinNames[i] == name) return static_cast<Builtin>(i);
  }
  return std::nullopt;
}

std::string_view builtin_name(Builtin builtin) {
  return kBuiltinNames[static_cast<std::size_t>(builtin)];
}

bool EnumDecl::has_literal(std::string_view literal) const {
  return std::find(literals.begin(), literals.end(), literal) != literals.end();
}

namespace {

std::string double_to_source(double value) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  std::string text(buffer, end);
  // Must lex as FLOAT, never as INT.
  if (text.find_first_of(".eEn") == std::string::npos) {
    text += ".0";
  } else if (text.find('.') == std::string::npos) {
    auto exponent = text.find_first_of("eE");
    if (exponent != std::string::npos) text.insert(exponent, ".0");
  }
  return text;
}

std::string quote(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

}  // namespace

std::string literal_to_source(const Literal& literal) {
  struct Printer {
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& v) const { return quote(v); }
    std::string operator()(double v) const { return double_to_source(v); }
    std::string operator()(const EnumValue& v) const {
      return v.enum_name.empty() ? v.literal : v.enum_name + "." + v.literal;
    }
  };
  return std::visit(Printer{}, literal);
}

std::string_view to_string(Direction direction) {
  return direction == Direction::kIn ? "in" : "out";
}

std::string PortRef::to_string() const {
  return instance ? *instance + "." + port : port;
}

std::string_view to_string(CompareOp op) {
  switch (op) {
    case CompareOp::kEq: return "==";
    case CompareOp::kNe: return "!=";
    case CompareOp::kLt: return "<";
    case CompareOp::kGt: return ">";
    case CompareOp::kLe: return "<=";
    case CompareOp::kGe: return ">=";
  }
  return "?";
}

bool is_ordering(CompareOp op) { return op != CompareOp::kEq && op != CompareOp::kNe; }

bool Automaton::has_state(std::string_view name) const {
  return std::any_of(states.begin(), states.end(),
                     [&](const StateDecl& s) { return s.name == name; });
}

const Port* ComponentType::find_port(std::string_view port_name) const {
  for (const auto& port : ports) {
    if (port.name == port_name) return &port;
  }
  return nullptr;
}

const Subcomponent* ComponentType::find_subcomponent(std::string_view instance_name) const {
  for (const auto& sub : subcomponents) {
    if (sub.instance_name == instance_name) return &sub;
  }
  return nullptr;
}

std::string_view to_string(Classification classification) {
  switch (classification) {
    case Classification::kComposed: return "composed";
    case Classification::kFullyModeled: return "fully modeled";
    case Classification::kAbstract: return "abstract";
  }
  return "?";
}

Classification classify(const ComponentType& component) {
  if (!component.subcomponents.empty()) return Classification::kComposed;
  return component.behavior ? Classification::kFullyModeled : Classification::kAbstract;
}

const ImplementationDecl* CodeLibraryManifest::find(std::string_view implementation) const {
  for (const auto& decl : implementations) {
    if (decl.name == implementation) return &decl;
  }
  return nullptr;
}

const ComponentType* ArchitectureModel::find_component(std::string_view name) const {
  for (const auto& component : components) {
    if (component.name == name) return &component;
  }
  return nullptr;
}

const EnumDecl* ArchitectureModel::find_enum(std::string_view name) const {
  for (const auto& cd : class_diagrams) {
    for (const auto& e : cd.enums) {
      if (e.name == name) return &e;
    }
  }
  return nullptr;
}

const RecordDecl* ArchitectureModel::find_record(std::string_view name) const {
  for (const auto& cd : class_diagrams) {
    for (const auto& r : cd.records) {
      if (r.name == name) return &r;
    }
  }
  return nullptr;
}

std::optional<DataTypeRef> ArchitectureModel::resolve_type(std::string_view name) const {
  if (builtin_from_name(name)) return DataTypeRef{std::string(name), TypeKind::kBuiltin};
  if (find_enum(name)) return DataTypeRef{std::string(name), TypeKind::kEnum};
  if (find_record(name)) return DataTypeRef{std::string(name), TypeKind::kRecord};
  return std::nullopt;
}

std::optional<Literal> fit_literal(const Literal& literal, const DataTypeRef& type,
                                   const ArchitectureModel& model) {
  switch (type.kind) {
    case TypeKind::kBuiltin:
      switch (*builtin_from_name(type.name)) {
        case Builtin::kInteger:
          if (std::holds_alternative<std::int64_t>(literal)) return literal;
          break;
        case Builtin::kBoolean:
          if (std::holds_alternative<bool>(literal)) return literal;
          break;
        case Builtin::kString:
          if (std::holds_alternative<std::string>(literal)) return literal;
          break;
        case Builtin::kDouble:
          if (std::holds_alternative<double>(literal)) return literal;
          break;
      }
      return std::nullopt;
    case TypeKind::kEnum: {
      const auto* value = std::get_if<EnumValue>(&literal);
      if (!value) return std::nullopt;
      if (!value->enum_name.empty() && value->enum_name != type.name) return std::nullopt;
      const auto* decl = model.find_enum(type.name);
      if (!decl || !decl->has_literal(value->literal)) return std::nullopt;
      return EnumValue{type.name, value->literal};
    }
    case TypeKind::kRecord:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace macc
