#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "compass/kernel.hpp"

// The .compass script language: one statement per line, every intermediate
// named. See README for the grammar and the operation table.
namespace compass::dsl {

enum class TokenKind { Ident, Number, Keyword, Punct, String, Newline, Eof };

struct Token {
  TokenKind kind = TokenKind::Eof;
  std::string lexeme;  // for String, the unescaped contents
  double number = 0.0;
  int line = 1;
  int column = 1;
};

enum class ScriptErrorKind { LexError, ParseError, NameError, ArityError, TypeError, ConstructionError };

std::string_view to_string(ScriptErrorKind kind);

class ScriptError : public std::runtime_error {
 public:
  ScriptError(ScriptErrorKind kind, int line, int column, const std::string& message)
      : std::runtime_error(message), kind_(kind), line_(line), column_(column) {}

  ScriptErrorKind kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  ScriptErrorKind kind_;
  int line_;
  int column_;
};

// Throws ScriptError{LexError}.
std::vector<Token> tokenize(std::string_view source);

enum class ArgKind { Ident, Number, Selector };

struct Arg {
  ArgKind kind = ArgKind::Ident;
  std::string name;
  double number = 0.0;
  Selector selector = Selector::Left;
  int line = 1;
  int column = 1;
};

struct Given {
  std::string name;
  double x = 0.0;
  double y = 0.0;
};

struct Let {
  std::vector<std::string> names;
  std::string op;
  std::vector<Arg> args;
};

enum class EmitTarget { Svg, Trace, Points };

struct Emit {
  EmitTarget target = EmitTarget::Points;
  std::string path;
};

struct Statement {
  std::variant<Given, Let, Emit> node;
  int line = 1;
  int column = 1;
};

// Structural equality; source positions are ignored.
bool operator==(const Arg& a, const Arg& b);
bool operator==(const Given& a, const Given& b);
bool operator==(const Let& a, const Let& b);
bool operator==(const Emit& a, const Emit& b);
bool operator==(const Statement& a, const Statement& b);

// Throws ScriptError{ParseError}.
std::vector<Statement> parse(const std::vector<Token>& tokens);
std::vector<Statement> parse(std::string_view source);

// Canonical source text; parse(print(ast)) == ast.
std::string print(const std::vector<Statement>& ast);

enum class ValueKind { Point, Circle };

struct Binding {
  ValueKind kind = ValueKind::Point;
  NodeId node;
};

struct EmitRequest {
  EmitTarget target = EmitTarget::Points;
  std::string path;
  int line = 1;
};

struct Interpretation {
  std::map<std::string, Binding> env;
  std::vector<std::string> seed_names;
  // Let-bound point names in binding order, with their nodes.
  std::vector<std::pair<std::string, NodeId>> outputs;
  Trace trace;
  std::vector<EmitRequest> emits;

  Point point(const std::string& name) const;
};

// Executes statements in order against one shared program whose seeds are the
// `given` points. Field operations (mul, add, neg, conj, half) read points as
// complex numbers over the frame formed by the first two given points.
// Performs no I/O. Throws ScriptError.
Interpretation interpret(const std::vector<Statement>& ast, const Tolerance& tol = {});
Interpretation run(std::string_view source, const Tolerance& tol = {});

}  // namespace compass::dsl
