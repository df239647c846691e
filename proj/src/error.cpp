#include "compass/error.hpp"

namespace compass {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonFiniteInput: return "NonFiniteInput";
    case ErrorKind::DegenerateCircle: return "DegenerateCircle";
    case ErrorKind::NoSuchIntersection: return "NoSuchIntersection";
    case ErrorKind::CoincidentCircles: return "CoincidentCircles";
    case ErrorKind::InvalidNodeId: return "InvalidNodeId";
    case ErrorKind::InvalidProgram: return "InvalidProgram";
    case ErrorKind::MalformedTrace: return "MalformedTrace";
    case ErrorKind::NotExterior: return "NotExterior";
    case ErrorKind::CenterInversion: return "CenterInversion";
    case ErrorKind::ScaleOverflow: return "ScaleOverflow";
    case ErrorKind::ParallelLines: return "ParallelLines";
    case ErrorKind::CenterOnLine: return "CenterOnLine";
    case ErrorKind::NotOnCircle: return "NotOnCircle";
    case ErrorKind::NotConstructibleFromFrame: return "NotConstructibleFromFrame";
  }
  return "Unknown";
}

}  // namespace compass
