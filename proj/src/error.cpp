#include "duniform/error.hpp"

namespace duniform {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotProper: return "not in R4_perp";
    case ErrorCode::DisjointCircles: return "disjoint circles, use inversive_distance";
    case ErrorCode::IntersectingCircles: return "circles intersect, use intersection_angle";
    case ErrorCode::NotNull: return "not a null vector";
    case ErrorCode::NotLorentz: return "not a Lorentz map";
    case ErrorCode::ImproperTriangulation: return "improper triangulation";
    case ErrorCode::NonManifoldEdge: return "non-manifold edge";
    case ErrorCode::NonDisk: return "non-disk";
    case ErrorCode::EulerCharacteristic: return "euler characteristic";
    case ErrorCode::UnknownVertex: return "unknown vertex";
    case ErrorCode::DegenerateEdge: return "degenerate edge";
    case ErrorCode::InadmissibleFace: return "inadmissible face";
    case ErrorCode::InadmissibleStart: return "inadmissible start";
    case ErrorCode::LineSearchStalled: return "line search stalled";
    case ErrorCode::MaxIterations: return "max iterations";
    case ErrorCode::StepCollapse: return "step collapse";
    case ErrorCode::NotFlat: return "not flat";
    case ErrorCode::FanNotClosed: return "fan does not close";
    case ErrorCode::EmptyLayout: return "empty layout";
    case ErrorCode::UnknownScenario: return "unknown scenario";
    case ErrorCode::MissingMultiplicity: return "missing multiplicity";
    case ErrorCode::NotSubcomplex: return "not a sub-complex";
    case ErrorCode::TransportNotProper: return "transported point not proper";
    case ErrorCode::Schema: return "schema";
    case ErrorCode::UnknownPreset: return "unknown preset";
  }
  return "error";
}

bool is_numerical(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateEdge:
    case ErrorCode::InadmissibleFace:
    case ErrorCode::InadmissibleStart:
    case ErrorCode::LineSearchStalled:
    case ErrorCode::MaxIterations:
    case ErrorCode::StepCollapse:
    case ErrorCode::NotFlat:
    case ErrorCode::FanNotClosed:
    case ErrorCode::TransportNotProper:
    case ErrorCode::DisjointCircles:
    case ErrorCode::IntersectingCircles:
    case ErrorCode::NotLorentz:
      return true;
    default:
      return false;
  }
}

}  // namespace duniform
