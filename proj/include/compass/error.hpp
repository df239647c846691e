#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace compass {

enum class ErrorKind {
  NonFiniteInput,
  DegenerateCircle,
  NoSuchIntersection,
  CoincidentCircles,
  InvalidNodeId,
  InvalidProgram,
  MalformedTrace,
  NotExterior,
  CenterInversion,
  ScaleOverflow,
  ParallelLines,
  CenterOnLine,
  NotOnCircle,
  NotConstructibleFromFrame,
};

std::string_view to_string(ErrorKind kind);

// Every failure the engine can classify. Fuzzing and the interpreter switch on
// kind(), so callers never parse messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace compass
