#pragma once

// Discrete conformal structures C_{alpha,eta} on the augmented disk:
//   l_ij^2 = alpha_i e^{2 f_i} + alpha_j e^{2 f_j} + 2 eta_ij e^{f_i + f_j}
// together with the three-case curvature and its Jacobian.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "duniform/complex.hpp"

namespace duniform {

/// alpha per vertex of the augmented disk (apex included) and eta per edge (apex edges included).
struct ConformalStructure {
  Eigen::VectorXd alpha;
  Eigen::VectorXd eta;
};

/// Log conformal factor f per vertex of the augmented disk, indexed like the vertices.
using Label = Eigen::VectorXd;
/// Curvature per vertex of the augmented disk.
using CurvatureVector = Eigen::VectorXd;

/// Builds the structure of the augmented problem: alpha on the disk, alpha_apex at the apex,
/// eta on disk edges and eta(apex, v) = mu_v for boundary vertices. mu is indexed by disk vertex;
/// entries at interior vertices are ignored.
ConformalStructure augmented_structure(const AugmentedDisk& aug, std::span<const double> alpha_disk,
                                       std::span<const double> eta_disk, std::span<const double> mu,
                                       double alpha_apex = 1.0);

/// Face loops may run on one thread or across OpenMP threads; results are identical.
enum class Execution { Serial, Parallel };

double squared_edge_length(double alpha_i, double alpha_j, double eta, double f_i, double f_j);

/// Throws DegenerateEdge if l^2 <= 0.
double edge_length(const AugmentedDisk& aug, const ConformalStructure& cs, const Label& f, int edge);

/// Angles opposite to the given lengths. Throws InadmissibleFace unless the strict triangle
/// inequalities hold.
std::array<double, 3> face_angles(const std::array<double, 3>& lengths);

/// Angles at face.v[0..2].
std::array<double, 3> face_angles(const AugmentedDisk& aug, const ConformalStructure& cs, const Label& f, int face);

struct MetricData {
  Eigen::VectorXd lengths;                    // per edge
  std::vector<std::array<double, 3>> angles;  // per face, at face.v[k]
};

MetricData compute_metric(const AugmentedDisk& aug, const ConformalStructure& cs, const Label& f,
                          Execution exec = Execution::Parallel);

/// 2pi - sum(disk angles) inside, sum(apex-face angles) - sum(disk angles) on the boundary,
/// sum(angles) - 2pi at the apex. Throws DegenerateEdge / InadmissibleFace.
CurvatureVector curvature(const AugmentedDisk& aug, const ConformalStructure& cs, const Label& f,
                          Execution exec = Execution::Parallel);

/// dK_v / df_w, assembled face by face in face order.
Eigen::MatrixXd curvature_jacobian(const AugmentedDisk& aug, const ConformalStructure& cs, const Label& f,
                                   Execution exec = Execution::Parallel);

struct CurvatureAndJacobian {
  CurvatureVector K;
  Eigen::MatrixXd J;
};

CurvatureAndJacobian curvature_and_jacobian(const AugmentedDisk& aug, const ConformalStructure& cs,
                                            const Label& f, Execution exec = Execution::Parallel);

struct Violation {
  ErrorCode code;  // DegenerateEdge or InadmissibleFace
  int index;       // edge or face index
  std::string message;
};

struct Admissibility {
  bool ok = true;
  std::optional<Violation> first;
};

Admissibility admissible(const AugmentedDisk& aug, const ConformalStructure& cs, const Label& f);

}  // namespace duniform
