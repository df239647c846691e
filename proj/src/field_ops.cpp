#include "compass/field_ops.hpp"

#include <array>
#include <utility>

#include "compass/constructions.hpp"
#include "compass/error.hpp"

namespace compass {

namespace {

const std::array<Point, 2> kFrame = {Point{0.0, 0.0}, Point{1.0, 0.0}};

Builder frame_builder(const Tolerance& tol) { return Builder({kFrame.begin(), kFrame.end()}, tol); }

ConstructibleValue finish(const Builder& bld, NodeId out, bool zero_basis = false) {
  return ConstructibleValue{bld.program({out}), out, zero_basis};
}

NodeId inline_value(Builder& bld, const ConstructibleValue& v, NodeId zero_node, NodeId one_node) {
  const NodeId seeds[] = {zero_node, one_node};
  Program guest = v.program;
  guest.outputs = {v.primary_output};
  return bld.inline_program(guest, seeds).front();
}

}  // namespace

Point ConstructibleValue::value(const Tolerance& tol) const {
  return execute(program, kFrame, tol).point(primary_output);
}

ConstructibleValue zero() { return ConstructibleValue{Program{2, {SeedStep{0}, SeedStep{1}}, {NodeId{0}}}, NodeId{0}}; }

ConstructibleValue one() { return ConstructibleValue{Program{2, {SeedStep{0}, SeedStep{1}}, {NodeId{1}}}, NodeId{1}}; }

ConstructibleValue from_program(Program program, NodeId output, const Tolerance& tol) {
  if (program.seed_count != 2) throw Error(ErrorKind::InvalidProgram, "constructible values use two seeds");
  program.outputs = {output};
  ConstructibleValue v{std::move(program), output};
  (void)v.value(tol);
  return v;
}

ConstructibleValue neg(const ConstructibleValue& a, const Tolerance& tol) {
  Builder bld = frame_builder(tol);
  const NodeId minus_one = extend(bld, bld.seed(1), bld.seed(0));
  return mul(finish(bld, minus_one), a, tol);
}

ConstructibleValue add(const ConstructibleValue& a, const ConstructibleValue& b, const Tolerance& tol) {
  // Replay a on (1, 2) to reach a + 1, then replay b on (a, a + 1).
  Builder bld = frame_builder(tol);
  const NodeId zero_node = bld.seed(0);
  const NodeId one_node = bld.seed(1);
  const NodeId a_node = inline_value(bld, a, zero_node, one_node);
  const NodeId two = extend(bld, zero_node, one_node);
  const NodeId a_plus_one = inline_value(bld, a, one_node, two);
  return finish(bld, inline_value(bld, b, a_node, a_plus_one));
}

ConstructibleValue mul(const ConstructibleValue& a, const ConstructibleValue& b, const Tolerance& tol) {
  // Replay b on (0, a): the similarity z -> a z.
  Builder bld = frame_builder(tol);
  const NodeId a_node = inline_value(bld, a, bld.seed(0), bld.seed(1));
  if (distance(bld.point(a_node), bld.point(bld.seed(0))) <= tol.eps_degenerate) {
    return finish(bld, bld.seed(0), true);
  }
  return finish(bld, inline_value(bld, b, bld.seed(0), a_node));
}

ConstructibleValue conj(const ConstructibleValue& a, const Tolerance& tol) {
  Builder bld = frame_builder(tol);
  const NodeId a_node = inline_value(bld, a, bld.seed(0), bld.seed(1));
  const Point p = bld.point(a_node);
  // 0 and 1 are real; a circle through its own center would be degenerate.
  for (std::size_t slot = 0; slot < 2; ++slot) {
    if (distance(p, bld.point(bld.seed(slot))) <= tol.eps_degenerate) return finish(bld, a_node);
  }
  const NodeId around_zero = bld.circle(bld.seed(0), a_node);
  const NodeId around_one = bld.circle(bld.seed(1), a_node);
  return finish(bld, pick_away_from(bld, around_zero, around_one, a_node));
}

ConstructibleValue alpha() {
  Builder bld = frame_builder({});
  const NodeId minus_one = extend(bld, bld.seed(1), bld.seed(0));
  const NodeId radius_two = bld.circle(minus_one, bld.seed(1));
  const NodeId radius_one = bld.circle(bld.seed(1), bld.seed(0));
  return finish(bld, bld.pick(radius_two, radius_one, Selector::Left));
}

ConstructibleValue demo_half(const Tolerance& tol) {
  const ConstructibleValue a = alpha();
  const ConstructibleValue norm_sq = mul(a, conj(a, tol), tol);
  return add(norm_sq, neg(one(), tol), tol);
}

}  // namespace compass
