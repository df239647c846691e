#include "compass/kernel.hpp"

#include <algorithm>
#include <string>

#include "compass/error.hpp"

namespace compass {

namespace {

std::string node_text(NodeId id) { return "node " + std::to_string(id.index); }

bool point_node(const std::vector<Step>& steps, NodeId id) {
  return id.index < steps.size() && produces_point(steps[id.index]);
}

bool circle_node(const std::vector<Step>& steps, NodeId id) {
  return id.index < steps.size() && std::holds_alternative<CircleStep>(steps[id.index]);
}

}  // namespace

Program seeds_only(std::size_t seed_count) {
  Program program;
  program.seed_count = seed_count;
  for (std::size_t slot = 0; slot < seed_count; ++slot) program.steps.emplace_back(SeedStep{slot});
  return program;
}

void validate(const Program& program) {
  const auto fail = [](const std::string& why) { throw Error(ErrorKind::InvalidProgram, why); };
  const auto& steps = program.steps;
  if (steps.size() < program.seed_count) fail("fewer steps than seeds");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const Step& step = steps[i];
    const auto earlier = [&](NodeId id) { return id.index < i; };
    if (const auto* seed = std::get_if<SeedStep>(&step)) {
      if (i >= program.seed_count || seed->slot != i) fail("seed step out of place at index " + std::to_string(i));
    } else if (i < program.seed_count) {
      fail("non-seed step among seeds at index " + std::to_string(i));
    } else if (const auto* c = std::get_if<CircleStep>(&step)) {
      if (!earlier(c->center) || !earlier(c->through)) fail("forward reference at index " + std::to_string(i));
      if (!point_node(steps, c->center) || !point_node(steps, c->through)) {
        fail("circle operand is not a point at index " + std::to_string(i));
      }
    } else {
      const auto& pick = std::get<PickStep>(step);
      if (!earlier(pick.circle1) || !earlier(pick.circle2)) fail("forward reference at index " + std::to_string(i));
      if (!circle_node(steps, pick.circle1) || !circle_node(steps, pick.circle2)) {
        fail("pick operand is not a circle at index " + std::to_string(i));
      }
    }
  }
  for (NodeId out : program.outputs) {
    if (!point_node(steps, out)) fail("output " + node_text(out) + " is not a point");
  }
}

const Point& Trace::point(NodeId id) const { return std::get<Point>(resolved.at(id.index)); }

const ResolvedCircle& Trace::circle(NodeId id) const { return std::get<ResolvedCircle>(resolved.at(id.index)); }

std::vector<Point> Trace::outputs() const {
  std::vector<Point> out;
  out.reserve(program.outputs.size());
  for (NodeId id : program.outputs) out.push_back(point(id));
  return out;
}

ResolvedCircle resolve_circle(Point center, Point through, const Tolerance& tol) {
  const double radius = distance(center, through);
  if (radius <= tol.eps_degenerate) {
    throw Error(ErrorKind::DegenerateCircle, "center and through point coincide");
  }
  return {center, radius};
}

Point resolve_pick(const ResolvedCircle& c1, const ResolvedCircle& c2, Selector which, const Tolerance& tol) {
  const IntersectionOutcome outcome = circle_circle_intersect(c1, c2, tol);
  if (const auto* two = std::get_if<TwoPoints>(&outcome)) {
    return which == Selector::Left ? two->left : two->right;
  }
  if (const auto* tangent = std::get_if<Tangent>(&outcome)) return tangent->point;
  if (std::holds_alternative<Coincident>(outcome)) {
    throw Error(ErrorKind::CoincidentCircles, "pick on coincident circles");
  }
  throw Error(ErrorKind::NoSuchIntersection, "pick on circles that do not meet");
}

Trace execute(const Program& program, std::span<const Point> seeds, const Tolerance& tol) {
  validate(program);
  if (seeds.size() != program.seed_count) {
    throw Error(ErrorKind::InvalidProgram, "expected " + std::to_string(program.seed_count) + " seeds, got " +
                                               std::to_string(seeds.size()));
  }
  Trace trace;
  trace.program = program;
  trace.seed_values.assign(seeds.begin(), seeds.end());
  trace.resolved.reserve(program.steps.size());
  for (const Step& step : program.steps) {
    if (const auto* seed = std::get_if<SeedStep>(&step)) {
      const Point p = seeds[seed->slot];
      if (!is_finite(p)) throw Error(ErrorKind::NonFiniteInput, "seed " + std::to_string(seed->slot));
      trace.resolved.emplace_back(p);
    } else if (const auto* c = std::get_if<CircleStep>(&step)) {
      trace.resolved.emplace_back(resolve_circle(trace.point(c->center), trace.point(c->through), tol));
      ++trace.circle_count;
    } else {
      const auto& pick = std::get<PickStep>(step);
      trace.resolved.emplace_back(resolve_pick(trace.circle(pick.circle1), trace.circle(pick.circle2), pick.which, tol));
    }
  }
  return trace;
}

Program rebase(const Program& host, const Program& guest, std::span<const NodeId> seed_map) {
  if (seed_map.size() != guest.seed_count) {
    throw Error(ErrorKind::InvalidNodeId, "seed map size does not match guest seed count");
  }
  for (NodeId id : seed_map) {
    if (!point_node(host.steps, id)) throw Error(ErrorKind::InvalidNodeId, node_text(id) + " is not a host point");
  }
  Program result = host;
  std::vector<NodeId> remap(guest.steps.size());
  const auto next_id = [&] { return NodeId{static_cast<std::uint32_t>(result.steps.size())}; };
  for (std::size_t i = 0; i < guest.steps.size(); ++i) {
    const Step& step = guest.steps[i];
    if (const auto* seed = std::get_if<SeedStep>(&step)) {
      remap[i] = seed_map[seed->slot];
    } else if (const auto* c = std::get_if<CircleStep>(&step)) {
      remap[i] = next_id();
      result.steps.emplace_back(CircleStep{remap[c->center.index], remap[c->through.index]});
    } else {
      const auto& pick = std::get<PickStep>(step);
      remap[i] = next_id();
      result.steps.emplace_back(PickStep{remap[pick.circle1.index], remap[pick.circle2.index], pick.which});
    }
  }
  result.outputs.clear();
  for (NodeId out : guest.outputs) result.outputs.push_back(remap.at(out.index));
  return result;
}

Point Similarity::apply(Point z) const {
  const Point d = q - p;
  return {p.x + d.x * z.x - d.y * z.y, p.y + d.x * z.y + d.y * z.x};
}

bool similarity_transport_check(const Program& program, const Similarity& sim, const Tolerance& tol) {
  const Point canonical[] = {{0.0, 0.0}, {1.0, 0.0}};
  const Point moved[] = {sim.p, sim.q};
  const auto base = execute(program, canonical, tol).outputs();
  const auto image = execute(program, moved, tol).outputs();
  const double bound = tol.eps_abs * std::max(1.0, sim.scale());
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (distance(sim.apply(base[i]), image[i]) > bound) return false;
  }
  return true;
}

AuditReport purity_audit(const Trace& trace) {
  const auto fail = [](const std::string& why) { throw Error(ErrorKind::MalformedTrace, why); };
  try {
    validate(trace.program);
  } catch (const Error& e) {
    fail(e.what());
  }
  const auto& steps = trace.program.steps;
  if (trace.resolved.size() != steps.size()) fail("resolved values do not match step count");
  if (trace.seed_values.size() != trace.program.seed_count) fail("seed values do not match seed count");
  AuditReport report;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const bool is_circle = std::holds_alternative<CircleStep>(steps[i]);
    if (is_circle != std::holds_alternative<ResolvedCircle>(trace.resolved[i])) {
      fail("value kind mismatch at node " + std::to_string(i));
    }
    if (std::holds_alternative<SeedStep>(steps[i])) {
      ++report.seeds;
    } else if (is_circle) {
      ++report.circles;
    } else {
      ++report.picks;
    }
  }
  if (report.circles != trace.circle_count) fail("circle_count disagrees with steps");
  return report;
}

Program extract(const Program& program, NodeId target, std::span<const NodeId> seeds) {
  validate(program);
  if (!point_node(program.steps, target)) throw Error(ErrorKind::InvalidNodeId, node_text(target));
  std::vector<bool> needed(program.steps.size(), false);
  needed[target.index] = true;
  for (std::size_t i = program.steps.size(); i-- > 0;) {
    if (!needed[i]) continue;
    if (const auto* c = std::get_if<CircleStep>(&program.steps[i])) {
      needed[c->center.index] = needed[c->through.index] = true;
    } else if (const auto* pick = std::get_if<PickStep>(&program.steps[i])) {
      needed[pick->circle1.index] = needed[pick->circle2.index] = true;
    }
  }

  Program result = seeds_only(seeds.size());
  std::vector<NodeId> remap(program.steps.size());
  std::vector<bool> mapped(program.steps.size(), false);
  for (std::size_t k = 0; k < seeds.size(); ++k) {
    if (!point_node(program.steps, seeds[k])) throw Error(ErrorKind::InvalidNodeId, node_text(seeds[k]));
    if (!mapped[seeds[k].index]) {
      remap[seeds[k].index] = NodeId{static_cast<std::uint32_t>(k)};
      mapped[seeds[k].index] = true;
    }
  }
  for (std::size_t i = 0; i < program.steps.size(); ++i) {
    if (!needed[i] || mapped[i]) continue;
    const Step& step = program.steps[i];
    const NodeId id{static_cast<std::uint32_t>(result.steps.size())};
    if (std::holds_alternative<SeedStep>(step)) {
      throw Error(ErrorKind::NotConstructibleFromFrame, "depends on " + node_text(NodeId{static_cast<std::uint32_t>(i)}));
    } else if (const auto* c = std::get_if<CircleStep>(&step)) {
      result.steps.emplace_back(CircleStep{remap[c->center.index], remap[c->through.index]});
    } else {
      const auto& pick = std::get<PickStep>(step);
      result.steps.emplace_back(PickStep{remap[pick.circle1.index], remap[pick.circle2.index], pick.which});
    }
    remap[i] = id;
    mapped[i] = true;
  }
  result.outputs = {remap[target.index]};
  return result;
}

Builder::Builder(std::vector<Point> seeds, Tolerance tol)
    : seed_count_(seeds.size()), tol_(checked(tol)), seed_values_(std::move(seeds)) {
  for (std::size_t slot = 0; slot < seed_count_; ++slot) {
    if (!is_finite(seed_values_[slot])) throw Error(ErrorKind::NonFiniteInput, "seed " + std::to_string(slot));
    steps_.emplace_back(SeedStep{slot});
    values_.emplace_back(seed_values_[slot]);
  }
}

NodeId Builder::seed(std::size_t slot) const {
  if (slot >= seed_count_) throw Error(ErrorKind::InvalidNodeId, "seed slot " + std::to_string(slot));
  return NodeId{static_cast<std::uint32_t>(slot)};
}

void Builder::check(NodeId id, const char* what) const {
  if (id.index >= steps_.size()) throw Error(ErrorKind::InvalidNodeId, std::string(what) + ": " + node_text(id));
}

NodeId Builder::push(Step step, NodeValue value) {
  const NodeId id{static_cast<std::uint32_t>(steps_.size())};
  steps_.push_back(step);
  values_.push_back(value);
  return id;
}

NodeId Builder::circle(NodeId center, NodeId through) {
  check(center, "circle center");
  check(through, "circle through");
  const auto key = std::make_pair(center.index, through.index);
  if (auto it = circle_memo_.find(key); it != circle_memo_.end()) return it->second;
  const ResolvedCircle value = resolve_circle(point(center), point(through), tol_);
  const NodeId id = push(CircleStep{center, through}, value);
  ++circle_count_;
  circle_memo_.emplace(key, id);
  return id;
}

NodeId Builder::pick(NodeId circle1, NodeId circle2, Selector which) {
  check(circle1, "pick");
  check(circle2, "pick");
  const Point value = resolve_pick(circle_value(circle1), circle_value(circle2), which, tol_);
  return push(PickStep{circle1, circle2, which}, value);
}

IntersectionOutcome Builder::probe(NodeId circle1, NodeId circle2) const {
  return circle_circle_intersect(circle_value(circle1), circle_value(circle2), tol_);
}

std::vector<NodeId> Builder::inline_program(const Program& guest, std::span<const NodeId> seed_map) {
  validate(guest);
  if (seed_map.size() != guest.seed_count) {
    throw Error(ErrorKind::InvalidNodeId, "seed map size does not match guest seed count");
  }
  for (NodeId id : seed_map) {
    check(id, "seed map");
    if (!is_point(id)) throw Error(ErrorKind::InvalidNodeId, node_text(id) + " is not a point");
  }
  std::vector<NodeId> remap(guest.steps.size());
  for (std::size_t i = 0; i < guest.steps.size(); ++i) {
    const Step& step = guest.steps[i];
    if (const auto* seed = std::get_if<SeedStep>(&step)) {
      remap[i] = seed_map[seed->slot];
    } else if (const auto* c = std::get_if<CircleStep>(&step)) {
      remap[i] = circle(remap[c->center.index], remap[c->through.index]);
    } else {
      const auto& p = std::get<PickStep>(step);
      remap[i] = pick(remap[p.circle1.index], remap[p.circle2.index], p.which);
    }
  }
  std::vector<NodeId> outputs;
  for (NodeId out : guest.outputs) outputs.push_back(remap[out.index]);
  return outputs;
}

const Point& Builder::point(NodeId id) const {
  check(id, "point");
  const auto* p = std::get_if<Point>(&values_[id.index]);
  if (p == nullptr) throw Error(ErrorKind::InvalidNodeId, node_text(id) + " is a circle, not a point");
  return *p;
}

const ResolvedCircle& Builder::circle_value(NodeId id) const {
  check(id, "circle");
  const auto* c = std::get_if<ResolvedCircle>(&values_[id.index]);
  if (c == nullptr) throw Error(ErrorKind::InvalidNodeId, node_text(id) + " is a point, not a circle");
  return *c;
}

bool Builder::is_point(NodeId id) const {
  check(id, "node");
  return std::holds_alternative<Point>(values_[id.index]);
}

Program Builder::program(std::vector<NodeId> outputs) const {
  Program program{seed_count_, steps_, std::move(outputs)};
  validate(program);
  return program;
}

Trace Builder::trace(std::vector<NodeId> outputs) const {
  Trace t;
  t.program = program(std::move(outputs));
  t.seed_values = seed_values_;
  t.resolved = values_;
  t.circle_count = circle_count_;
  return t;
}

}  // namespace compass
