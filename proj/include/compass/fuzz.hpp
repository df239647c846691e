#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "compass/field_ops.hpp"
#include "compass/random.hpp"

namespace compass {

struct FuzzOptions {
  std::size_t cases = 1000;
  std::uint64_t seed = 42;
  Tolerance tol;
  std::string op = "all";
  double threshold = 1e-6;
};

// In report order.
const std::vector<std::string>& fuzz_ops();

struct OpReport {
  std::string op;
  std::size_t cases = 0;
  std::size_t failures = 0;
  double max_error = 0.0;
  std::vector<std::string> failing_cases;  // reproduction lines, capped
};

// Each op draws from its own SplitMix64 stream seeded with
// SplitMix64(seed ^ fnv1a64(op)).next(), so cases do not depend on which other
// ops run. Throws std::invalid_argument on an unknown op.
OpReport fuzz_op(const std::string& op, const FuzzOptions& options);

// Writes the deterministic report to `out`, warnings to `err`. Returns 0 when
// every case passed, 3 on any mismatch, 2 on an unknown op.
int run_fuzz(const FuzzOptions& options, std::ostream& out, std::ostream& err);

struct RandomValue {
  ConstructibleValue value;
  Point expected;
  std::string expr;
};

// A constructible value built from {1, -1, 2, alpha, omega, conj omega} by up
// to `depth` nested ring operations, with the expected complex value computed
// independently.
RandomValue random_constructible(SplitMix64& rng, int depth, const Tolerance& tol = {});

}  // namespace compass
