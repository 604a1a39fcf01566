#include "macc/parser.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "lexer.hpp"
#include "macc/error.hpp"

namespace macc {

using detail::ParseFailure;
using detail::Token;
using detail::TokenKind;

std::optional<SourceKind> SourceUnit::kind_for(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  if (ext == ".arc") return SourceKind::kArchitecture;
  if (ext == ".cd") return SourceKind::kClassDiagram;
  if (ext == ".app") return SourceKind::kAppConfig;
  if (ext == ".lib") return SourceKind::kLibProps;
  return std::nullopt;
}

SourceUnit read_source(const std::filesystem::path& path) {
  auto kind = SourceUnit::kind_for(path);
  if (!kind) throw Error(ErrorCode::kIoError, "unknown model file kind: " + path.string());
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return SourceUnit{path, *kind, text.str()};
}

namespace {

class Parser {
 public:
  explicit Parser(const SourceUnit& unit)
      : file_(unit.path.generic_string()), tokens_(detail::tokenize(unit.text)) {}

  // --- architecture -------------------------------------------------------

  ComponentType architecture(const std::filesystem::path& path) {
    ComponentType component;
    expect_keyword("component");
    const Token& name = expect_ident("component type name");
    component.name = name.text;
    component.origin = origin(name);
    reject_parameters("component type");
    if (path.stem().string() != component.name) {
      throw ParseFailure{"NAME", name.line, name.column,
                         "component '" + component.name + "' must be declared in a file named " +
                             component.name + ".arc"};
    }
    expect_punct("{");
    while (!at_punct("}")) element(component);
    expect_punct("}");
    expect_end();
    return component;
  }

  // --- class diagram ------------------------------------------------------

  ClassDiagram class_diagram() {
    ClassDiagram cd;
    expect_keyword("classdiagram");
    const Token& name = expect_ident("class diagram name");
    cd.name = name.text;
    cd.origin = origin(name);
    expect_punct("{");
    while (!at_punct("}")) {
      if (accept_keyword("enum")) {
        EnumDecl decl;
        const Token& enum_name = expect_ident("enum name");
        decl.name = enum_name.text;
        decl.origin = origin(enum_name);
        expect_punct("{");
        do {
          const Token& literal = expect_ident("enum literal");
          if (decl.has_literal(literal.text)) {
            throw ParseFailure{"DUPLICATE", literal.line, literal.column,
                               "duplicate literal '" + literal.text + "' in enum '" + decl.name +
                                   "'"};
          }
          decl.literals.push_back(literal.text);
          decl.literal_origins.push_back(origin(literal));
        } while (accept_punct(","));
        expect_punct(";");
        expect_punct("}");
        cd.enums.push_back(std::move(decl));
      } else if (accept_keyword("class")) {
        RecordDecl decl;
        const Token& record_name = expect_ident("class name");
        decl.name = record_name.text;
        decl.origin = origin(record_name);
        expect_punct("{");
        while (!at_punct("}")) {
          FieldDecl field;
          field.type_name = expect_ident("field type").text;
          const Token& field_name = expect_ident("field name");
          field.name = field_name.text;
          field.origin = origin(field_name);
          expect_punct(";");
          decl.fields.push_back(std::move(field));
        }
        expect_punct("}");
        cd.records.push_back(std::move(decl));
      } else {
        fail_here("expected 'enum', 'class' or '}'");
      }
    }
    expect_punct("}");
    expect_end();
    return cd;
  }

  // --- application configuration -----------------------------------------

  ApplicationConfiguration app_config() {
    ApplicationConfiguration config;
    while (at_keyword("import")) config.imports.push_back(import_clause());
    expect_keyword("application");
    const Token& name = expect_ident("application name");
    config.name = name.text;
    config.origin = origin(name);
    expect_punct("{");

    expect_keyword("generators");
    do {
      const Token& generator = expect_ident("generator name");
      config.generators.push_back({generator.text, origin(generator)});
    } while (accept_punct(","));
    expect_punct(";");

    expect_keyword("bindings");
    std::set<std::string> bound;
    do {
      expect_keyword("map");
      BindingDecl binding;
      const Token& first = current();
      binding.instance = qualified_name();
      binding.origin = origin(first);
      if (!bound.insert(binding.instance).second) {
        throw ParseFailure{"DUPLICATE", first.line, first.column,
                           "instance '" + binding.instance + "' is bound twice"};
      }
      expect_keyword("to");
      const Token& impl = expect_ident("implementation name");
      binding.implementation = impl.text;
      binding.implementation_origin = origin(impl);
      config.bindings.push_back(std::move(binding));
    } while (accept_punct(","));
    expect_punct(";");
    expect_punct("}");
    expect_end();
    return config;
  }

  // --- library properties -------------------------------------------------

  CodeLibraryManifest lib_props(const std::filesystem::path& path) {
    CodeLibraryManifest library;
    expect_keyword("library");
    const Token& name = expect_ident("library name");
    library.name = name.text;
    library.origin = origin(name);
    if (path.stem().string() != library.name) {
      throw ParseFailure{"NAME", name.line, name.column,
                         "library '" + library.name + "' must be declared in a file named " +
                             library.name + ".lib"};
    }
    expect_punct("{");
    expect_keyword("rte");
    library.rte = expect_ident("runtime environment").text;
    expect_punct(";");
    while (accept_keyword("implementation")) {
      ImplementationDecl decl;
      const Token& impl = expect_ident("implementation name");
      decl.name = impl.text;
      decl.origin = origin(impl);
      if (library.find(decl.name)) {
        throw ParseFailure{"DUPLICATE", impl.line, impl.column,
                           "duplicate implementation '" + decl.name + "'"};
      }
      expect_keyword("implements");
      decl.implements = expect_ident("component type name").text;
      if (accept_keyword("kind")) {
        StubKind kind;
        kind.name = expect_ident("stub kind").text;
        if (accept_punct("(")) {
          kind.parameter = integer(expect(TokenKind::kInt, "integer"));
          expect_punct(")");
        }
        decl.kind = std::move(kind);
      }
      expect_punct(";");
      library.implementations.push_back(std::move(decl));
    }
    expect_punct("}");
    expect_end();
    return library;
  }

 private:
  void element(ComponentType& component) {
    if (accept_keyword("port")) {
      do {
        Port port;
        if (accept_keyword("in")) {
          port.direction = Direction::kIn;
        } else if (accept_keyword("out")) {
          port.direction = Direction::kOut;
        } else {
          fail_here("expected 'in' or 'out'");
        }
        port.type_name = expect_ident("port type").text;
        const Token& name = expect_ident("port name");
        port.name = name.text;
        port.origin = origin(name);
        component.ports.push_back(std::move(port));
      } while (accept_punct(","));
      expect_punct(";");
    } else if (accept_keyword("component")) {
      std::string type = expect_ident("component type").text;
      reject_parameters("subcomponent");
      do {
        const Token& name = expect_ident("instance name");
        component.subcomponents.push_back({type, name.text, origin(name)});
      } while (accept_punct(","));
      expect_punct(";");
    } else if (at_keyword("connect")) {
      Connector connector;
      connector.origin = origin(current());
      advance();
      connector.source = port_ref();
      const Token& arrow = current();
      expect_punct("->");
      if (current().kind != TokenKind::kIdent && current().kind != TokenKind::kKeyword) {
        throw ParseFailure{"SYNTAX", arrow.line, arrow.column, "dangling '->' without a target port"};
      }
      do {
        connector.targets.push_back(port_ref());
      } while (accept_punct(","));
      expect_punct(";");
      component.connectors.push_back(std::move(connector));
    } else if (at_keyword("automaton")) {
      const Token& keyword = current();
      if (component.behavior) {
        throw ParseFailure{"DUPLICATE", keyword.line, keyword.column,
                           "component '" + component.name + "' has more than one automaton"};
      }
      advance();
      component.behavior = automaton(origin(keyword));
    } else if (at_keyword("import")) {
      component.imports.push_back(import_clause());
    } else {
      fail_here("expected 'port', 'component', 'connect', 'automaton', 'import' or '}'");
    }
  }

  Automaton automaton(Origin start) {
    Automaton automaton;
    automaton.origin = start;
    expect_punct("{");
    expect_keyword("state");
    do {
      const Token& state = expect_ident("state name");
      automaton.states.push_back({state.text, origin(state)});
    } while (accept_punct(","));
    expect_punct(";");

    expect_keyword("initial");
    const Token& initial = expect_ident("initial state");
    automaton.initial_state = initial.text;
    automaton.initial_origin = origin(initial);
    if (accept_punct("/")) automaton.initial_actions = actions();
    expect_punct(";");

    while (!at_punct("}")) {
      Transition transition;
      const Token& source = expect_ident("transition source state");
      transition.source = source.text;
      transition.origin = origin(source);
      expect_punct("->");
      const Token& target = expect_ident("transition target state");
      transition.target = target.text;
      transition.target_origin = origin(target);
      if (accept_punct("[")) {
        do {
          GuardAtom atom;
          const Token& port = expect_ident("port name");
          atom.port = port.text;
          atom.origin = origin(port);
          atom.op = compare_op();
          atom.literal = literal();
          transition.guard.push_back(std::move(atom));
        } while (accept_punct("&&"));
        expect_punct("]");
      }
      if (accept_punct("/")) transition.actions = actions();
      expect_punct(";");
      automaton.transitions.push_back(std::move(transition));
    }
    expect_punct("}");
    return automaton;
  }

  std::vector<Assignment> actions() {
    std::vector<Assignment> result;
    expect_punct("{");
    do {
      Assignment assignment;
      const Token& port = expect_ident("port name");
      assignment.port = port.text;
      assignment.origin = origin(port);
      expect_punct("=");
      assignment.literal = literal();
      result.push_back(std::move(assignment));
    } while (accept_punct(","));
    expect_punct("}");
    return result;
  }

  CompareOp compare_op() {
    static const std::pair<std::string_view, CompareOp> kOps[] = {
        {"==", CompareOp::kEq}, {"!=", CompareOp::kNe}, {"<=", CompareOp::kLe},
        {">=", CompareOp::kGe}, {"<", CompareOp::kLt},  {">", CompareOp::kGt}};
    for (const auto& [text, op] : kOps) {
      if (accept_punct(text)) return op;
    }
    fail_here("expected a comparison operator");
  }

  Literal literal() {
    const Token& token = current();
    switch (token.kind) {
      case TokenKind::kInt:
        advance();
        return integer(token);
      case TokenKind::kFloat: {
        advance();
        double value = 0;
        auto [ptr, ec] =
            std::from_chars(token.text.data(), token.text.data() + token.text.size(), value);
        if (ec != std::errc() || ptr != token.text.data() + token.text.size()) {
          throw ParseFailure{"SYNTAX", token.line, token.column,
                             "floating literal out of range: " + token.text};
        }
        return value;
      }
      case TokenKind::kString:
        advance();
        return token.text;
      case TokenKind::kKeyword:
        if (token.text == "true" || token.text == "false") {
          advance();
          return token.text == "true";
        }
        break;
      case TokenKind::kIdent: {
        advance();
        if (accept_punct(".")) {
          return EnumValue{token.text, expect_ident("enum literal").text};
        }
        return EnumValue{"", token.text};
      }
      default:
        break;
    }
    fail_here("expected a literal");
  }

  std::int64_t integer(const Token& token) {
    std::int64_t value = 0;
    auto [ptr, ec] =
        std::from_chars(token.text.data(), token.text.data() + token.text.size(), value);
    if (ec != std::errc() || ptr != token.text.data() + token.text.size()) {
      throw ParseFailure{"SYNTAX", token.line, token.column,
                         "integer literal out of range: " + token.text};
    }
    return value;
  }

  PortRef port_ref() {
    PortRef ref;
    const Token& first = expect_ident("port reference");
    ref.origin = origin(first);
    if (accept_punct(".")) {
      ref.instance = first.text;
      ref.port = expect_ident("port name").text;
    } else {
      ref.port = first.text;
    }
    return ref;
  }

  std::string qualified_name() {
    std::string name = expect_ident("instance name").text;
    while (accept_punct(".")) name += "." + expect_ident("instance name").text;
    return name;
  }

  Import import_clause() {
    expect_keyword("import");
    const Token& library = expect_ident("library name");
    expect_punct(".");
    expect_punct("*");
    expect_punct(";");
    return {library.text, origin(library)};
  }

  void reject_parameters(std::string_view what) {
    const Token& token = current();
    if (at_punct("(")) {
      throw ParseFailure{"UNSUPPORTED", token.line, token.column,
                         std::string(what) + " configuration parameters are not supported"};
    }
    if (at_punct("<")) {
      throw ParseFailure{"UNSUPPORTED", token.line, token.column,
                         std::string(what) + " generic type parameters are not supported"};
    }
  }

  // --- token helpers ------------------------------------------------------

  const Token& current() const { return tokens_[pos_]; }
  void advance() {
    if (current().kind != TokenKind::kEnd) ++pos_;
  }

  bool at_keyword(std::string_view word) const {
    return current().kind == TokenKind::kKeyword && current().text == word;
  }
  bool at_punct(std::string_view text) const {
    return current().kind == TokenKind::kPunct && current().text == text;
  }

  bool accept_keyword(std::string_view word) {
    if (!at_keyword(word)) return false;
    advance();
    return true;
  }
  bool accept_punct(std::string_view text) {
    if (!at_punct(text)) return false;
    advance();
    return true;
  }

  void expect_keyword(std::string_view word) {
    if (!accept_keyword(word)) fail_here("expected '" + std::string(word) + "'");
  }
  void expect_punct(std::string_view text) {
    if (!accept_punct(text)) fail_here("expected '" + std::string(text) + "'");
  }

  const Token& expect_ident(std::string_view what) {
    if (current().kind == TokenKind::kKeyword) {
      fail_here("expected " + std::string(what) + ", found reserved keyword '" +
                current().text + "'");
    }
    return expect(TokenKind::kIdent, what);
  }

  const Token& expect(TokenKind kind, std::string_view what) {
    if (current().kind != kind) fail_here("expected " + std::string(what));
    const Token& token = current();
    advance();
    return token;
  }

  void expect_end() {
    if (current().kind != TokenKind::kEnd) fail_here("unexpected input after declaration");
  }

  [[noreturn]] void fail_here(std::string message) const {
    const Token& token = current();
    std::string found = token.kind == TokenKind::kEnd      ? "end of input"
                        : token.kind == TokenKind::kString ? "string literal"
                                                           : "'" + token.text + "'";
    throw ParseFailure{"SYNTAX", token.line, token.column, message + ", found " + found};
  }

  Origin origin(const Token& token) const { return {{file_, token.line, token.column}}; }

  std::string file_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

template <typename T, typename Fn>
ParseResult<T> guarded(const SourceUnit& unit, SourceKind expected, Fn&& fn) {
  ParseResult<T> result;
  std::string file = unit.path.generic_string();
  if (unit.kind != expected) {
    result.diagnostics.push_back(make_error("SYNTAX", {file, 1, 1}, "wrong source kind"));
    return result;
  }
  try {
    Parser parser(unit);
    result.value = fn(parser);
  } catch (const ParseFailure& failure) {
    result.diagnostics.push_back(
        make_error(failure.code, {file, failure.line, failure.column}, failure.message));
  }
  return result;
}

}  // namespace

ParseResult<ComponentType> parse_architecture(const SourceUnit& unit) {
  return guarded<ComponentType>(unit, SourceKind::kArchitecture,
                                [&](Parser& p) { return p.architecture(unit.path); });
}

ParseResult<ClassDiagram> parse_class_diagram(const SourceUnit& unit) {
  return guarded<ClassDiagram>(unit, SourceKind::kClassDiagram,
                               [](Parser& p) { return p.class_diagram(); });
}

ParseResult<ApplicationConfiguration> parse_app_config(const SourceUnit& unit) {
  return guarded<ApplicationConfiguration>(unit, SourceKind::kAppConfig,
                                           [](Parser& p) { return p.app_config(); });
}

ParseResult<CodeLibraryManifest> parse_lib_props(const SourceUnit& unit) {
  return guarded<CodeLibraryManifest>(unit, SourceKind::kLibProps,
                                      [&](Parser& p) { return p.lib_props(unit.path); });
}

}  // namespace macc
