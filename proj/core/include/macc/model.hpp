#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "macc/diagnostic.hpp"

namespace macc {

// Where an AST element was declared. Position is metadata only: two
// elements that differ only in origin are structurally equal.
struct Origin {
  SourceLocation where;

  friend bool operator==(const Origin&, const Origin&) { return true; }
};

// ---------------------------------------------------------------------------
// Data types

enum class Builtin { kInteger, kBoolean, kString, kDouble };

inline constexpr std::array<std::string_view, 4> kBuiltinNames = {"Integer", "Boolean", "String",
                                                                  "Double"};

std::optional<Builtin> builtin_from_name(std::string_view name);
std::string_view builtin_name(Builtin builtin);

enum class TypeKind { kBuiltin, kEnum, kRecord };

struct DataTypeRef {
  std::string name;
  TypeKind kind = TypeKind::kBuiltin;

  friend bool operator==(const DataTypeRef&, const DataTypeRef&) = default;
};

struct EnumDecl {
  std::string name;
  std::vector<std::string> literals;
  Origin origin;
  std::vector<Origin> literal_origins;

  bool has_literal(std::string_view literal) const;
  friend bool operator==(const EnumDecl&, const EnumDecl&) = default;
};

struct FieldDecl {
  std::string name;
  std::string type_name;
  Origin origin;

  friend bool operator==(const FieldDecl&, const FieldDecl&) = default;
};

struct RecordDecl {
  std::string name;
  std::vector<FieldDecl> fields;
  Origin origin;

  friend bool operator==(const RecordDecl&, const RecordDecl&) = default;
};

struct ClassDiagram {
  std::string name;
  std::vector<EnumDecl> enums;
  std::vector<RecordDecl> records;
  Origin origin;

  friend bool operator==(const ClassDiagram&, const ClassDiagram&) = default;
};

// ---------------------------------------------------------------------------
// Literals

// `enum_name` is empty for a bare literal (`ALERT`); it is filled in once the
// literal is checked against a port type.
struct EnumValue {
  std::string enum_name;
  std::string literal;

  friend bool operator==(const EnumValue&, const EnumValue&) = default;
};

using Literal = std::variant<std::int64_t, bool, std::string, double, EnumValue>;

// Concrete syntax of a literal, re-parseable by every front end.
std::string literal_to_source(const Literal& literal);

// ---------------------------------------------------------------------------
// Components

enum class Direction { kIn, kOut };

std::string_view to_string(Direction direction);

struct Port {
  std::string name;
  Direction direction = Direction::kIn;
  std::string type_name;
  Origin origin;

  friend bool operator==(const Port&, const Port&) = default;
};

struct Subcomponent {
  std::string type_name;
  std::string instance_name;
  Origin origin;

  friend bool operator==(const Subcomponent&, const Subcomponent&) = default;
};

// `port` alone names a port of the enclosing component; `instance.port` names
// a port of a subcomponent.
struct PortRef {
  std::optional<std::string> instance;
  std::string port;
  Origin origin;

  std::string to_string() const;
  friend bool operator==(const PortRef&, const PortRef&) = default;
};

struct Connector {
  PortRef source;
  std::vector<PortRef> targets;
  Origin origin;

  friend bool operator==(const Connector&, const Connector&) = default;
};

enum class CompareOp { kEq, kNe, kLt, kGt, kLe, kGe };

std::string_view to_string(CompareOp op);
bool is_ordering(CompareOp op);

struct GuardAtom {
  std::string port;
  CompareOp op = CompareOp::kEq;
  Literal literal;
  Origin origin;

  friend bool operator==(const GuardAtom&, const GuardAtom&) = default;
};

struct Assignment {
  std::string port;
  Literal literal;
  Origin origin;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

struct StateDecl {
  std::string name;
  Origin origin;

  friend bool operator==(const StateDecl&, const StateDecl&) = default;
};

struct Transition {
  std::string source;
  std::string target;
  std::vector<GuardAtom> guard;
  std::vector<Assignment> actions;
  Origin origin;
  Origin target_origin;

  friend bool operator==(const Transition&, const Transition&) = default;
};

struct Automaton {
  std::vector<StateDecl> states;
  std::string initial_state;
  std::vector<Assignment> initial_actions;
  std::vector<Transition> transitions;
  Origin origin;
  Origin initial_origin;

  bool has_state(std::string_view name) const;
  friend bool operator==(const Automaton&, const Automaton&) = default;
};

struct Import {
  std::string library;
  Origin origin;

  friend bool operator==(const Import&, const Import&) = default;
};

struct ComponentType {
  std::string name;
  std::vector<Import> imports;
  std::vector<Port> ports;
  std::vector<Subcomponent> subcomponents;
  std::vector<Connector> connectors;
  std::optional<Automaton> behavior;
  Origin origin;

  const Port* find_port(std::string_view port_name) const;
  const Subcomponent* find_subcomponent(std::string_view instance_name) const;
  bool is_atomic() const { return subcomponents.empty(); }

  friend bool operator==(const ComponentType&, const ComponentType&) = default;
};

enum class Classification { kComposed, kFullyModeled, kAbstract };

std::string_view to_string(Classification classification);

// Composed if it has subcomponents; otherwise fully modeled when it carries an
// automaton and abstract when it does not.
Classification classify(const ComponentType& component);

// ---------------------------------------------------------------------------
// Application configuration and library properties

struct GeneratorRef {
  std::string name;
  Origin origin;

  friend bool operator==(const GeneratorRef&, const GeneratorRef&) = default;
};

struct BindingDecl {
  std::string instance;        // qualified, rooted at the root type name
  std::string implementation;  // implementation name from an imported library
  Origin origin;
  Origin implementation_origin;

  friend bool operator==(const BindingDecl&, const BindingDecl&) = default;
};

struct ApplicationConfiguration {
  std::string name;
  std::vector<Import> imports;
  std::vector<GeneratorRef> generators;
  std::vector<BindingDecl> bindings;
  Origin origin;

  friend bool operator==(const ApplicationConfiguration&,
                         const ApplicationConfiguration&) = default;
};

struct StubKind {
  std::string name;
  std::optional<std::int64_t> parameter;

  friend bool operator==(const StubKind&, const StubKind&) = default;
};

struct ImplementationDecl {
  std::string name;
  std::string implements;
  std::optional<StubKind> kind;
  Origin origin;

  friend bool operator==(const ImplementationDecl&, const ImplementationDecl&) = default;
};

struct CodeLibraryManifest {
  std::string name;
  std::string rte;
  std::vector<ImplementationDecl> implementations;
  Origin origin;

  const ImplementationDecl* find(std::string_view implementation) const;
  friend bool operator==(const CodeLibraryManifest&, const CodeLibraryManifest&) = default;
};

// ---------------------------------------------------------------------------
// Architecture model

struct ArchitectureModel {
  std::vector<ComponentType> components;
  std::vector<ClassDiagram> class_diagrams;

  // First declaration wins when names collide (CC1 reports the rest).
  const ComponentType* find_component(std::string_view name) const;
  const EnumDecl* find_enum(std::string_view name) const;
  const RecordDecl* find_record(std::string_view name) const;
  std::optional<DataTypeRef> resolve_type(std::string_view name) const;

  friend bool operator==(const ArchitectureModel&, const ArchitectureModel&) = default;
};

// Checks `literal` against a port type. Returns the literal with its enum name
// filled in when it fits, nullopt otherwise. Record types accept no literal.
std::optional<Literal> fit_literal(const Literal& literal, const DataTypeRef& type,
                                   const ArchitectureModel& model);

}  // namespace macc
