#pragma once

#include "compass/kernel.hpp"

namespace compass {

// A point of the plane read as a complex number over the frame 0 = (0,0),
// 1 = (1,0), carried together with the compass program that reaches it.
struct ConstructibleValue {
  Program program;  // two seeds: slot 0 is zero, slot 1 is one
  NodeId primary_output;
  // Set when mul() short-circuited a collapsed basis to the zero seed.
  bool zero_basis = false;

  Point value(const Tolerance& tol = {}) const;
  std::size_t step_count() const { return program.steps.size(); }
};

ConstructibleValue zero();
ConstructibleValue one();
// Wraps a two-seed program; throws if it does not execute on the unit frame.
ConstructibleValue from_program(Program program, NodeId output, const Tolerance& tol = {});

ConstructibleValue neg(const ConstructibleValue& a, const Tolerance& tol = {});
ConstructibleValue add(const ConstructibleValue& a, const ConstructibleValue& b, const Tolerance& tol = {});
ConstructibleValue mul(const ConstructibleValue& a, const ConstructibleValue& b, const Tolerance& tol = {});
ConstructibleValue conj(const ConstructibleValue& a, const Tolerance& tol = {});

// (3 + i sqrt 15) / 4: circles about -1 of radius 2 and about 1 of radius 1.
ConstructibleValue alpha();
// |alpha|^2 - 1 = 1/2.
ConstructibleValue demo_half(const Tolerance& tol = {});

}  // namespace compass
