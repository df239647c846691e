#include <algorithm>
#include <cmath>
#include <array>
#include <optional>

#include "compass/constructions.hpp"
#include "compass/dsl.hpp"
#include "compass/error.hpp"
#include "compass/field_ops.hpp"

namespace compass::dsl {

namespace {

enum class Param { Point, Circle, Count, OptSelector };

struct OpInfo {
  std::string_view name;
  std::vector<Param> params;
  ValueKind result;
  std::size_t max_names;
};

const std::vector<OpInfo>& op_table() {
  using P = Param;
  static const std::vector<OpInfo> table = {
      {"circle", {P::Point, P::Point}, ValueKind::Circle, 1},
      {"intersect", {P::Circle, P::Circle, P::OptSelector}, ValueKind::Point, 2},
      {"apex", {P::Point, P::Point, P::OptSelector}, ValueKind::Point, 1},
      {"extend", {P::Point, P::Point}, ValueKind::Point, 1},
      {"nth", {P::Point, P::Point, P::Count}, ValueKind::Point, 1},
      {"midpoint", {P::Point, P::Point}, ValueKind::Point, 1},
      {"diam", {P::Point, P::Point}, ValueKind::Circle, 1},
      {"foot", {P::Point, P::Point, P::Point}, ValueKind::Point, 1},
      {"invert", {P::Point, P::Point, P::Point}, ValueKind::Point, 1},
      {"linexline", {P::Point, P::Point, P::Point, P::Point}, ValueKind::Point, 1},
      {"linexcircle", {P::Point, P::Point, P::Point, P::Point}, ValueKind::Point, 2},
      {"mul", {P::Point, P::Point}, ValueKind::Point, 1},
      {"add", {P::Point, P::Point}, ValueKind::Point, 1},
      {"neg", {P::Point}, ValueKind::Point, 1},
      {"conj", {P::Point}, ValueKind::Point, 1},
      {"half", {}, ValueKind::Point, 1},
  };
  return table;
}

std::string kind_name(ValueKind k) { return k == ValueKind::Point ? "point" : "circle"; }

// Operand as seen by an operation after checking.
struct Operand {
  NodeId node;
  CircleNodes circle;
  std::uint32_t count = 0;
  Selector selector = Selector::Left;
  bool has_selector = false;
};

class Interpreter {
 public:
  Interpreter(const std::vector<Statement>& ast, const Tolerance& tol) : ast_(ast), tol_(checked(tol)) {}

  Interpretation run() {
    std::vector<Point> seeds;
    for (const Statement& st : ast_) {
      if (const auto* g = std::get_if<Given>(&st.node)) seeds.push_back({g->x, g->y});
    }
    try {
      bld_.emplace(std::move(seeds), tol_);
    } catch (const Error& e) {
      throw ScriptError(ScriptErrorKind::ConstructionError, 1, 1, e.what());
    }

    for (const Statement& st : ast_) {
      line_ = st.line;
      column_ = st.column;
      if (const auto* g = std::get_if<Given>(&st.node)) {
        bind(g->name, {ValueKind::Point, bld_->seed(result_.seed_names.size())}, column_, false);
        result_.seed_names.push_back(g->name);
      } else if (const auto* l = std::get_if<Let>(&st.node)) {
        let(*l);
      } else {
        const auto& e = std::get<Emit>(st.node);
        result_.emits.push_back({e.target, e.path, st.line});
      }
    }

    std::vector<NodeId> outs;
    for (const auto& named : result_.outputs) outs.push_back(named.second);
    result_.trace = bld_->trace(std::move(outs));
    return std::move(result_);
  }

 private:
  [[noreturn]] void fail(ScriptErrorKind kind, int column, const std::string& msg) const {
    throw ScriptError(kind, line_, column, msg);
  }

  void bind(const std::string& name, Binding b, int column, bool output = true) {
    if (result_.env.count(name)) fail(ScriptErrorKind::NameError, column, "'" + name + "' is already bound");
    result_.env.emplace(name, b);
    if (output && b.kind == ValueKind::Point) result_.outputs.emplace_back(name, b.node);
  }

  const Binding& lookup(const Arg& a) const {
    auto it = result_.env.find(a.name);
    if (it == result_.env.end()) fail(ScriptErrorKind::NameError, a.column, "'" + a.name + "' is not defined");
    return it->second;
  }

  std::vector<Operand> check_args(const OpInfo& info, const Let& l) const {
    std::size_t required = 0;
    for (Param p : info.params) required += p != Param::OptSelector;
    if (l.args.size() < required || l.args.size() > info.params.size()) {
      std::string count = std::to_string(required);
      if (info.params.size() != required) count += " or " + std::to_string(info.params.size());
      fail(ScriptErrorKind::ArityError, column_,
           std::string(info.name) + " takes " + count + " argument(s), got " + std::to_string(l.args.size()));
    }
    std::vector<Operand> ops;
    for (std::size_t i = 0; i < l.args.size(); ++i) {
      const Arg& a = l.args[i];
      Operand o;
      switch (info.params[i]) {
        case Param::Point:
        case Param::Circle: {
          const ValueKind want = info.params[i] == Param::Point ? ValueKind::Point : ValueKind::Circle;
          if (a.kind != ArgKind::Ident) fail(ScriptErrorKind::TypeError, a.column, "expected a " + kind_name(want) + " name");
          const Binding& b = lookup(a);
          if (b.kind != want) {
            fail(ScriptErrorKind::TypeError, a.column, "'" + a.name + "' is a " + kind_name(b.kind) + ", expected a " + kind_name(want));
          }
          o.node = b.node;
          break;
        }
        case Param::Count:
          if (a.kind != ArgKind::Number || a.number != std::floor(a.number) || a.number < 1 || a.number > kMaxScale) {
            fail(ScriptErrorKind::TypeError, a.column, "expected an integer between 1 and " + std::to_string(kMaxScale));
          }
          o.count = static_cast<std::uint32_t>(a.number);
          break;
        case Param::OptSelector:
          if (a.kind != ArgKind::Selector) fail(ScriptErrorKind::TypeError, a.column, "expected 'left' or 'right'");
          o.selector = a.selector;
          o.has_selector = true;
          break;
      }
      ops.push_back(o);
    }
    return ops;
  }

  std::array<NodeId, 2> frame() const {
    if (bld_->seed_count() < 2) {
      fail(ScriptErrorKind::ConstructionError, column_, "field operations need two given points as 0 and 1");
    }
    return {bld_->seed(0), bld_->seed(1)};
  }

  ConstructibleValue value_of(NodeId node) const {
    const auto f = frame();
    Program sub = extract(bld_->program({node}), node, f);
    const NodeId out = sub.outputs.front();
    return from_program(std::move(sub), out, tol_);
  }

  NodeId place(const ConstructibleValue& v) {
    const auto f = frame();
    Program guest = v.program;
    guest.outputs = {v.primary_output};
    return bld_->inline_program(guest, f).front();
  }

  std::vector<NodeId> line_circle(NodeId a, NodeId b, CircleNodes omega) {
    const Point pa = bld_->point(a);
    const Point pb = bld_->point(b);
    const Point po = bld_->point(omega.center);
    std::vector<NodeId> found;
    if (orientation_sign(pa, pb, po, tol_) == 0 && !(pa == pb)) {
      const NodeId toward = distance(pa, po) >= distance(pb, po) ? a : b;
      const auto pair = line_circle_center_on_line(*bld_, omega.center, toward, omega);
      found.assign(pair.begin(), pair.end());
    } else {
      found = line_circle_off_center(*bld_, a, b, omega);
    }
    const Point dir = pb - pa;
    std::stable_sort(found.begin(), found.end(), [&](NodeId x, NodeId y) {
      return dot(bld_->point(x) - pa, dir) > dot(bld_->point(y) - pa, dir);
    });
    return found;
  }

  std::vector<NodeId> apply(std::string_view op, const std::vector<Operand>& o, std::size_t names) {
    Builder& b = *bld_;
    if (op == "circle") return {b.circle(o[0].node, o[1].node)};
    if (op == "intersect") {
      if (names == 2) return {b.pick(o[0].node, o[1].node, Selector::Left), b.pick(o[0].node, o[1].node, Selector::Right)};
      return {b.pick(o[0].node, o[1].node, o.size() > 2 ? o[2].selector : Selector::Left)};
    }
    if (op == "apex") return {apex(b, o[0].node, o[1].node, o.size() > 2 ? o[2].selector : Selector::Left)};
    if (op == "extend") return {extend(b, o[0].node, o[1].node)};
    if (op == "nth") return {nth_point(b, o[0].node, o[1].node, o[2].count)};
    if (op == "midpoint") return {midpoint(b, o[0].node, o[1].node)};
    if (op == "diam") {
      const CircleNodes c = diameter_circle(b, o[0].node, o[1].node);
      return {b.circle(c.center, c.through)};
    }
    if (op == "foot") return {perp_foot(b, o[0].node, o[1].node, o[2].node)};
    if (op == "invert") return {invert_general(b, {o[1].node, o[2].node}, o[0].node)};
    if (op == "linexline") return {line_line(b, o[0].node, o[1].node, o[2].node, o[3].node)};
    if (op == "linexcircle") return line_circle(o[0].node, o[1].node, {o[2].node, o[3].node});
    if (op == "mul") return {place(mul(value_of(o[0].node), value_of(o[1].node), tol_))};
    if (op == "add") return {place(add(value_of(o[0].node), value_of(o[1].node), tol_))};
    if (op == "neg") return {place(neg(value_of(o[0].node), tol_))};
    if (op == "conj") return {place(conj(value_of(o[0].node), tol_))};
    return {place(demo_half(tol_))};
  }

  void let(const Let& l) {
    const auto& table = op_table();
    const auto it = std::find_if(table.begin(), table.end(), [&](const OpInfo& s) { return s.name == l.op; });
    if (it == table.end()) fail(ScriptErrorKind::NameError, column_, "unknown operation '" + l.op + "'");
    const OpInfo& info = *it;
    if (l.names.size() > info.max_names) {
      fail(ScriptErrorKind::ArityError, column_, l.op + " binds 1 name, got " + std::to_string(l.names.size()));
    }
    if (l.names.size() == 2 && l.names[0] == l.names[1]) {
      fail(ScriptErrorKind::NameError, column_, "'" + l.names[0] + "' is bound twice");
    }
    for (const std::string& n : l.names) {
      if (result_.env.count(n)) fail(ScriptErrorKind::NameError, column_, "'" + n + "' is already bound");
    }
    const std::vector<Operand> ops = check_args(info, l);
    if (l.op == "intersect" && l.names.size() == 2 && ops.size() > 2) {
      fail(ScriptErrorKind::ArityError, l.args[2].column, "a two-name intersect binds both points and takes no selector");
    }

    std::vector<NodeId> nodes;
    try {
      nodes = apply(info.name, ops, l.names.size());
    } catch (const Error& e) {
      fail(ScriptErrorKind::ConstructionError, column_, e.what());
    }
    // A tangent line meets the circle once; both names then denote that point.
    if (nodes.size() == 1 && l.names.size() == 2) nodes.push_back(nodes.front());
    for (std::size_t i = 0; i < l.names.size(); ++i) bind(l.names[i], {info.result, nodes[i]}, column_);
  }

  const std::vector<Statement>& ast_;
  Tolerance tol_;
  std::optional<Builder> bld_;
  Interpretation result_;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace

Point Interpretation::point(const std::string& name) const {
  const auto it = env.find(name);
  if (it == env.end() || it->second.kind != ValueKind::Point) {
    throw std::out_of_range("no point named " + name);
  }
  return trace.point(it->second.node);
}

Interpretation interpret(const std::vector<Statement>& ast, const Tolerance& tol) {
  return Interpreter(ast, tol).run();
}

Interpretation run(std::string_view source, const Tolerance& tol) { return interpret(parse(source), tol); }

}  // namespace compass::dsl
