#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "compass/dsl.hpp"

namespace compass::dsl {

std::string_view to_string(ScriptErrorKind kind) {
  switch (kind) {
    case ScriptErrorKind::LexError: return "LexError";
    case ScriptErrorKind::ParseError: return "ParseError";
    case ScriptErrorKind::NameError: return "NameError";
    case ScriptErrorKind::ArityError: return "ArityError";
    case ScriptErrorKind::TypeError: return "TypeError";
    case ScriptErrorKind::ConstructionError: return "ConstructionError";
  }
  return "ScriptError";
}

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
bool ident_char(char c) { return ident_start(c) || is_digit(c); }

bool is_keyword(std::string_view word) {
  return word == "given" || word == "let" || word == "emit" || word == "left" || word == "right";
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (c == '\n') {
        out.push_back(make(TokenKind::Newline, "\n"));
        ++pos_;
        ++line_;
        col_ = 1;
      } else if (ident_start(c)) {
        out.push_back(identifier());
      } else if (is_digit(c) || c == '.' || ((c == '+' || c == '-') && number_follows(pos_ + 1))) {
        out.push_back(number());
      } else if (c == '=' || c == '(' || c == ')' || c == ',') {
        out.push_back(make(TokenKind::Punct, std::string(1, c)));
        advance();
      } else if (c == '"') {
        out.push_back(string());
      } else {
        fail(line_, col_, "unexpected character " + describe(c));
      }
    }
    out.push_back(make(TokenKind::Eof, ""));
    return out;
  }

 private:
  [[noreturn]] static void fail(int line, int col, const std::string& msg) {
    throw ScriptError(ScriptErrorKind::LexError, line, col, msg);
  }

  std::string describe(char c) const {
    const auto u = static_cast<unsigned char>(c);
    if (u >= 0x80) return "(non-ASCII)";
    if (u < 0x20 || u == 0x7f) {
      char buf[16];
      std::snprintf(buf, sizeof buf, "0x%02x", u);
      return buf;
    }
    return std::string("'") + c + "'";
  }

  // Columns count code points: UTF-8 continuation bytes do not advance them.
  void advance() {
    ++pos_;
    while (pos_ < src_.size() && (static_cast<unsigned char>(src_[pos_]) & 0xC0) == 0x80) ++pos_;
    ++col_;
  }

  Token make(TokenKind kind, std::string lexeme) const {
    Token t;
    t.kind = kind;
    t.lexeme = std::move(lexeme);
    t.line = line_;
    t.column = col_;
    return t;
  }

  bool number_follows(std::size_t at) const {
    if (at >= src_.size()) return false;
    if (is_digit(src_[at])) return true;
    return src_[at] == '.' && at + 1 < src_.size() && is_digit(src_[at + 1]);
  }

  Token identifier() {
    Token t = make(TokenKind::Ident, "");
    const std::size_t start = pos_;
    while (pos_ < src_.size() && ident_char(src_[pos_])) advance();
    t.lexeme = std::string(src_.substr(start, pos_ - start));
    if (is_keyword(t.lexeme)) t.kind = TokenKind::Keyword;
    return t;
  }

  Token number() {
    Token t = make(TokenKind::Number, "");
    const std::size_t start = pos_;
    if (src_[pos_] == '+' || src_[pos_] == '-') advance();
    std::size_t digits = 0;
    while (pos_ < src_.size() && is_digit(src_[pos_])) advance(), ++digits;
    if (pos_ < src_.size() && src_[pos_] == '.') {
      advance();
      while (pos_ < src_.size() && is_digit(src_[pos_])) advance(), ++digits;
    }
    if (digits == 0) fail(t.line, t.column, "malformed number");
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      advance();
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) advance();
      if (pos_ >= src_.size() || !is_digit(src_[pos_])) fail(line_, col_, "malformed exponent");
      while (pos_ < src_.size() && is_digit(src_[pos_])) advance();
    }
    if (pos_ < src_.size() && (ident_char(src_[pos_]) || src_[pos_] == '.')) {
      fail(line_, col_, "unexpected character " + describe(src_[pos_]) + " after number");
    }
    t.lexeme = std::string(src_.substr(start, pos_ - start));
    t.number = std::strtod(t.lexeme.c_str(), nullptr);
    if (!std::isfinite(t.number)) fail(t.line, t.column, "number out of range: " + t.lexeme);
    return t;
  }

  Token string() {
    Token t = make(TokenKind::String, "");
    advance();
    std::string value;
    for (;;) {
      if (pos_ >= src_.size() || src_[pos_] == '\n') fail(t.line, t.column, "unterminated string");
      const char c = src_[pos_];
      if (c == '"') {
        advance();
        break;
      }
      if (c == '\\') {
        const int line = line_;
        const int col = col_;
        ++pos_;
        ++col_;
        if (pos_ < src_.size() && (src_[pos_] == '"' || src_[pos_] == '\\')) {
          value += src_[pos_];
          ++pos_;
          ++col_;
          continue;
        }
        fail(line, col, "unknown escape sequence");
      }
      const std::size_t start = pos_;
      advance();
      value.append(src_.substr(start, pos_ - start));
    }
    t.lexeme = std::move(value);
    return t;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case TokenKind::Ident: return "identifier '" + t.lexeme + "'";
    case TokenKind::Number: return "number " + t.lexeme;
    case TokenKind::Keyword: return "keyword '" + t.lexeme + "'";
    case TokenKind::Punct: return "'" + t.lexeme + "'";
    case TokenKind::String: return "string";
    case TokenKind::Newline: return "end of line";
    case TokenKind::Eof: return "end of input";
  }
  return "token";
}

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {
    if (toks_.empty() || toks_.back().kind != TokenKind::Eof) {
      throw ScriptError(ScriptErrorKind::ParseError, 1, 1, "token stream must end with Eof");
    }
  }

  std::vector<Statement> run() {
    std::vector<Statement> out;
    while (peek().kind != TokenKind::Eof) {
      if (peek().kind == TokenKind::Newline) {
        ++pos_;
        continue;
      }
      const Token& head = peek();
      Statement st;
      st.line = head.line;
      st.column = head.column;
      if (is_kw(head, "given")) {
        st.node = given();
      } else if (is_kw(head, "let")) {
        st.node = let();
      } else if (is_kw(head, "emit")) {
        st.node = emit();
      } else {
        fail("'given', 'let' or 'emit'");
      }
      if (peek().kind == TokenKind::Newline) {
        ++pos_;
      } else if (peek().kind != TokenKind::Eof) {
        fail("end of line");
      }
      out.push_back(std::move(st));
    }
    return out;
  }

 private:
  static bool is_kw(const Token& t, std::string_view word) {
    return t.kind == TokenKind::Keyword && t.lexeme == word;
  }
  static bool is_punct(const Token& t, std::string_view p) {
    return t.kind == TokenKind::Punct && t.lexeme == p;
  }

  const Token& peek() const { return toks_[pos_]; }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    const std::string found = describe(t);
    throw ScriptError(ScriptErrorKind::ParseError, t.line, t.column,
                      "expected " + expected + " but found " + found);
  }

  const Token& take() { return toks_[pos_++]; }

  void punct(std::string_view p) {
    if (!is_punct(peek(), p)) fail("'" + std::string(p) + "'");
    ++pos_;
  }

  std::string ident(const char* what) {
    if (peek().kind != TokenKind::Ident) fail(what);
    return take().lexeme;
  }

  double number() {
    if (peek().kind != TokenKind::Number) fail("number");
    return take().number;
  }

  Given given() {
    ++pos_;
    Given g;
    g.name = ident("identifier");
    punct("=");
    punct("(");
    g.x = number();
    punct(",");
    g.y = number();
    punct(")");
    return g;
  }

  Let let() {
    ++pos_;
    Let l;
    l.names.push_back(ident("identifier"));
    if (is_punct(peek(), ",")) {
      ++pos_;
      l.names.push_back(ident("identifier"));
    }
    if (!is_punct(peek(), "=")) fail(l.names.size() == 1 ? "',' or '='" : "'='");
    ++pos_;
    l.op = ident("operation name");
    punct("(");
    if (is_punct(peek(), ")")) {
      ++pos_;
      return l;
    }
    for (;;) {
      l.args.push_back(arg());
      if (is_punct(peek(), ")")) {
        ++pos_;
        return l;
      }
      if (!is_punct(peek(), ",")) fail("',' or ')'");
      ++pos_;
    }
  }

  Arg arg() {
    const Token& t = peek();
    Arg a;
    a.line = t.line;
    a.column = t.column;
    if (t.kind == TokenKind::Ident) {
      a.kind = ArgKind::Ident;
      a.name = t.lexeme;
    } else if (t.kind == TokenKind::Number) {
      a.kind = ArgKind::Number;
      a.number = t.number;
    } else if (is_kw(t, "left") || is_kw(t, "right")) {
      a.kind = ArgKind::Selector;
      a.selector = t.lexeme == "left" ? Selector::Left : Selector::Right;
    } else {
      fail("argument");
    }
    ++pos_;
    return a;
  }

  Emit emit() {
    ++pos_;
    Emit e;
    const Token& target = peek();
    if (target.kind != TokenKind::Ident) fail("'svg', 'trace' or 'points'");
    if (target.lexeme == "svg") {
      e.target = EmitTarget::Svg;
    } else if (target.lexeme == "trace") {
      e.target = EmitTarget::Trace;
    } else if (target.lexeme == "points") {
      e.target = EmitTarget::Points;
    } else {
      fail("'svg', 'trace' or 'points'");
    }
    ++pos_;
    if (peek().kind != TokenKind::String) fail("string");
    e.path = take().lexeme;
    return e;
  }

  const std::vector<Token>& toks_;
  std::size_t pos_ = 0;
};

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  // Shortest text that reads back to the same double.
  for (int prec = 1; prec < 17; ++prec) {
    char shorter[32];
    std::snprintf(shorter, sizeof shorter, "%.*g", prec, v);
    if (std::strtod(shorter, nullptr) == v) return shorter;
  }
  return buf;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

bool operator==(const Arg& a, const Arg& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case ArgKind::Ident: return a.name == b.name;
    case ArgKind::Number: return a.number == b.number;
    case ArgKind::Selector: return a.selector == b.selector;
  }
  return false;
}

bool operator==(const Given& a, const Given& b) { return a.name == b.name && a.x == b.x && a.y == b.y; }
bool operator==(const Let& a, const Let& b) { return a.names == b.names && a.op == b.op && a.args == b.args; }
bool operator==(const Emit& a, const Emit& b) { return a.target == b.target && a.path == b.path; }
bool operator==(const Statement& a, const Statement& b) { return a.node == b.node; }

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

std::vector<Statement> parse(const std::vector<Token>& tokens) { return Parser(tokens).run(); }

std::vector<Statement> parse(std::string_view source) { return parse(tokenize(source)); }

std::string print(const std::vector<Statement>& ast) {
  std::string out;
  for (const Statement& st : ast) {
    if (const auto* g = std::get_if<Given>(&st.node)) {
      out += "given " + g->name + " = (" + format_number(g->x) + ", " + format_number(g->y) + ")";
    } else if (const auto* l = std::get_if<Let>(&st.node)) {
      out += "let " + l->names.front();
      if (l->names.size() > 1) out += ", " + l->names[1];
      out += " = " + l->op + "(";
      for (std::size_t i = 0; i < l->args.size(); ++i) {
        if (i) out += ", ";
        const Arg& a = l->args[i];
        switch (a.kind) {
          case ArgKind::Ident: out += a.name; break;
          case ArgKind::Number: out += format_number(a.number); break;
          case ArgKind::Selector: out += a.selector == Selector::Left ? "left" : "right"; break;
        }
      }
      out += ")";
    } else {
      const auto& e = std::get<Emit>(st.node);
      const char* target = e.target == EmitTarget::Svg ? "svg" : e.target == EmitTarget::Trace ? "trace" : "points";
      out += std::string("emit ") + target + " " + quote(e.path);
    }
    out += "\n";
  }
  return out;
}

}  // namespace compass::dsl
