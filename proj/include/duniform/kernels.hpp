#pragma once

// Per-face evaluation of lengths, angles and angle derivatives. The serial loop is the
// reference; the OpenMP loop writes the same per-face records and is checked against it.
// Reductions over faces happen afterwards, sequentially in face order.

#include <array>
#include <vector>

#include "duniform/conformal.hpp"

namespace duniform::kernels {

enum class FaceStatus { Ok, DegenerateEdge, Inadmissible };

struct FaceGeometry {
  std::array<double, 3> length{};  // length[k]: edge opposite v[k]
  std::array<double, 3> angle{};   // angle at v[k]
  /// dangle[k][m] = d angle[k] / d f_{v[m]}; filled only when derivatives are requested.
  std::array<std::array<double, 3>, 3> dangle{};
  FaceStatus status = FaceStatus::Ok;
  int bad_corner = -1;  // for DegenerateEdge: the corner opposite the bad edge
};

/// Evaluates one face.
FaceGeometry evaluate_face(const Face& face, const ConformalStructure& cs, const Label& f, bool derivatives);

void evaluate_faces_serial(const AugmentedDisk& aug, const ConformalStructure& cs, const Label& f,
                           bool derivatives, std::vector<FaceGeometry>& out);

void evaluate_faces_parallel(const AugmentedDisk& aug, const ConformalStructure& cs, const Label& f,
                             bool derivatives, std::vector<FaceGeometry>& out);

inline void evaluate_faces(const AugmentedDisk& aug, const ConformalStructure& cs, const Label& f,
                           bool derivatives, std::vector<FaceGeometry>& out, Execution exec) {
  if (exec == Execution::Parallel) {
    evaluate_faces_parallel(aug, cs, f, derivatives, out);
  } else {
    evaluate_faces_serial(aug, cs, f, derivatives, out);
  }
}

/// Throws the error of the first failing face in face order, if any.
void throw_first_failure(const AugmentedDisk& aug, const std::vector<FaceGeometry>& faces);

}  // namespace duniform::kernels
