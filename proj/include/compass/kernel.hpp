#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "compass/numeric.hpp"

namespace compass {

struct NodeId {
  std::uint32_t index = 0;
  friend auto operator<=>(NodeId, NodeId) = default;
};

// Left is the intersection point p with orientation_sign(center1, center2, p) >= 0.
// Orientation survives every orientation-preserving similarity, which is what
// makes replaying a program on new seeds meaningful.
enum class Selector { Left, Right };

constexpr Selector opposite(Selector s) { return s == Selector::Left ? Selector::Right : Selector::Left; }

struct SeedStep {
  std::size_t slot = 0;
  friend bool operator==(const SeedStep&, const SeedStep&) = default;
};
struct CircleStep {
  NodeId center;
  NodeId through;
  friend bool operator==(const CircleStep&, const CircleStep&) = default;
};
struct PickStep {
  NodeId circle1;
  NodeId circle2;
  Selector which = Selector::Left;
  friend bool operator==(const PickStep&, const PickStep&) = default;
};

using Step = std::variant<SeedStep, CircleStep, PickStep>;

constexpr bool produces_point(const Step& s) { return !std::holds_alternative<CircleStep>(s); }

// A topologically ordered list of compass steps over seed slots. Node i is the
// value produced by steps[i].
struct Program {
  std::size_t seed_count = 0;
  std::vector<Step> steps;
  std::vector<NodeId> outputs;

  friend bool operator==(const Program&, const Program&) = default;
};

// Program over `seed_count` seeds with no other steps.
Program seeds_only(std::size_t seed_count);

// Checks seed layout, backward references, operand kinds and outputs.
// Throws Error{InvalidProgram}.
void validate(const Program& program);

using NodeValue = std::variant<Point, ResolvedCircle>;

struct Trace {
  Program program;
  std::vector<Point> seed_values;
  std::vector<NodeValue> resolved;
  std::size_t circle_count = 0;

  const Point& point(NodeId id) const;
  const ResolvedCircle& circle(NodeId id) const;
  std::vector<Point> outputs() const;
};

// Single-step resolution shared by execute() and Builder so both produce the
// same bits.
ResolvedCircle resolve_circle(Point center, Point through, const Tolerance& tol);
Point resolve_pick(const ResolvedCircle& c1, const ResolvedCircle& c2, Selector which,
                   const Tolerance& tol);

Trace execute(const Program& program, std::span<const Point> seeds, const Tolerance& tol = {});

// Appends the guest's non-seed steps to `host`, wiring guest seed slot k to
// host node seed_map[k]. The result's outputs are the guest outputs, remapped.
Program rebase(const Program& host, const Program& guest, std::span<const NodeId> seed_map);

// z -> p + (q - p) z, with points read as complex numbers.
struct Similarity {
  Point p{0.0, 0.0};
  Point q{1.0, 0.0};

  Point apply(Point z) const;
  double scale() const { return std::hypot(q.x - p.x, q.y - p.y); }
};

// Runs a two-seed program on (0,0),(1,0) and on (sim.p, sim.q) and compares
// outputs within tol.eps_abs * max(1, |q - p|).
bool similarity_transport_check(const Program& program, const Similarity& sim,
                                const Tolerance& tol = {});

struct AuditReport {
  std::size_t circles = 0;
  std::size_t picks = 0;
  std::size_t seeds = 0;

  friend bool operator==(const AuditReport&, const AuditReport&) = default;
};

// Throws Error{MalformedTrace} when the trace is internally inconsistent.
AuditReport purity_audit(const Trace& trace);

// Copies the dependency closure of `target` into a new program whose seed k is
// `seeds[k]` of the source. Throws Error{NotConstructibleFromFrame} if the
// closure reaches any other seed.
Program extract(const Program& program, NodeId target, std::span<const NodeId> seeds);

// Records steps and evaluates them eagerly, so construction code can inspect
// coordinates while deciding which intersection to take.
class Builder {
 public:
  explicit Builder(std::vector<Point> seeds, Tolerance tol = {});

  NodeId seed(std::size_t slot) const;
  std::size_t seed_count() const { return seed_count_; }

  // Reuses an existing Circle step with the same operands.
  NodeId circle(NodeId center, NodeId through);
  NodeId pick(NodeId circle1, NodeId circle2, Selector which);
  // Evaluates the intersection without recording anything.
  IntersectionOutcome probe(NodeId circle1, NodeId circle2) const;

  std::vector<NodeId> inline_program(const Program& guest, std::span<const NodeId> seed_map);

  const Point& point(NodeId id) const;
  const ResolvedCircle& circle_value(NodeId id) const;
  bool is_point(NodeId id) const;
  std::size_t size() const { return steps_.size(); }
  const Tolerance& tolerance() const { return tol_; }

  Program program(std::vector<NodeId> outputs) const;
  Trace trace(std::vector<NodeId> outputs) const;

 private:
  NodeId push(Step step, NodeValue value);
  void check(NodeId id, const char* what) const;

  std::size_t seed_count_;
  Tolerance tol_;
  std::vector<Point> seed_values_;
  std::vector<Step> steps_;
  std::vector<NodeValue> values_;
  std::size_t circle_count_ = 0;
  std::map<std::pair<std::uint32_t, std::uint32_t>, NodeId> circle_memo_;
};

}  // namespace compass
