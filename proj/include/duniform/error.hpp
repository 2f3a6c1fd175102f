#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace duniform {

enum class ErrorCode {
  // Minkowski kernel
  NotProper,
  DisjointCircles,
  IntersectingCircles,
  NotNull,
  NotLorentz,
  // Combinatorics
  ImproperTriangulation,
  NonManifoldEdge,
  NonDisk,
  EulerCharacteristic,
  UnknownVertex,
  // Metric
  DegenerateEdge,
  InadmissibleFace,
  // Solver
  InadmissibleStart,
  LineSearchStalled,
  MaxIterations,
  StepCollapse,
  // Layout
  NotFlat,
  FanNotClosed,
  EmptyLayout,
  UnknownScenario,
  // Measures
  MissingMultiplicity,
  NotSubcomplex,
  // Rigidity
  TransportNotProper,
  // IO
  Schema,
  UnknownPreset,
};

std::string_view to_string(ErrorCode code);

/// True for failures of the numerics (CLI exit code 2); false for bad input (exit code 1).
bool is_numerical(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace duniform
