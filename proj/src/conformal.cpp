#include "duniform/conformal.hpp"

#include <cmath>
#include <numbers>

#include "duniform/kernels.hpp"

namespace duniform {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double base_curvature(const AugmentedDisk& aug, int v) {
  switch (aug.vertex_class(v)) {
    case SimplexClass::Interior: return kTwoPi;
    case SimplexClass::Boundary: return 0.0;
    case SimplexClass::Augmented: return -kTwoPi;
  }
  return 0.0;
}

// K_v = c_v + sum over faces of sign(face) * angle, with sign -1 on the disk and +1 on apex faces.
CurvatureVector reduce_curvature(const AugmentedDisk& aug, const std::vector<kernels::FaceGeometry>& geo) {
  const auto n = static_cast<Eigen::Index>(aug.num_vertices());
  CurvatureVector K(n);
  for (Eigen::Index v = 0; v < n; ++v) K[v] = base_curvature(aug, static_cast<int>(v));
  const auto faces = aug.faces();
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const double s = -static_cast<double>(faces[i].sign());
    for (int k = 0; k < 3; ++k) K[faces[i].v[k]] += s * geo[i].angle[k];
  }
  return K;
}

Eigen::MatrixXd reduce_jacobian(const AugmentedDisk& aug, const std::vector<kernels::FaceGeometry>& geo) {
  const auto n = static_cast<Eigen::Index>(aug.num_vertices());
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  const auto faces = aug.faces();
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const double s = -static_cast<double>(faces[i].sign());
    for (int k = 0; k < 3; ++k) {
      for (int m = 0; m < 3; ++m) J(faces[i].v[k], faces[i].v[m]) += s * geo[i].dangle[k][m];
    }
  }
  return J;
}

}  // namespace

ConformalStructure augmented_structure(const AugmentedDisk& aug, std::span<const double> alpha_disk,
                                       std::span<const double> eta_disk, std::span<const double> mu,
                                       double alpha_apex) {
  const auto& base = aug.base();
  if (alpha_disk.size() != base.num_vertices() || eta_disk.size() != base.num_edges() ||
      mu.size() != base.num_vertices()) {
    throw Error(ErrorCode::Schema, "structure sizes do not match the disk");
  }
  ConformalStructure cs;
  cs.alpha.resize(static_cast<Eigen::Index>(aug.num_vertices()));
  cs.eta.resize(static_cast<Eigen::Index>(aug.num_edges()));
  for (std::size_t v = 0; v < alpha_disk.size(); ++v) cs.alpha[static_cast<Eigen::Index>(v)] = alpha_disk[v];
  cs.alpha[aug.apex()] = alpha_apex;
  for (std::size_t e = 0; e < eta_disk.size(); ++e) cs.eta[static_cast<Eigen::Index>(e)] = eta_disk[e];
  const auto edges = aug.edges();
  for (std::size_t e = base.num_edges(); e < edges.size(); ++e) {
    cs.eta[static_cast<Eigen::Index>(e)] = mu[static_cast<std::size_t>(edges[e].v[0])];
  }
  return cs;
}

double squared_edge_length(double alpha_i, double alpha_j, double eta, double f_i, double f_j) {
  return alpha_i * std::exp(2.0 * f_i) + alpha_j * std::exp(2.0 * f_j) + 2.0 * eta * std::exp(f_i + f_j);
}

double edge_length(const AugmentedDisk& aug, const ConformalStructure& cs, const Label& f, int edge) {
  const auto& e = aug.edges()[static_cast<std::size_t>(edge)];
  const int i = e.v[0];
  const int j = e.v[1];
  const double sq = squared_edge_length(cs.alpha[i], cs.alpha[j], cs.eta[edge], f[i], f[j]);
  if (!(sq > 0.0)) {
    throw Error(ErrorCode::DegenerateEdge, "edge " + std::to_string(edge) + " (" + std::to_string(aug.id(i)) + "-" +
                                               std::to_string(aug.id(j)) + ") has l^2 = " + std::to_string(sq));
  }
  return std::sqrt(sq);
}

std::array<double, 3> face_angles(const std::array<double, 3>& l) {
  const double s1 = -l[0] + l[1] + l[2];
  const double s2 = l[0] - l[1] + l[2];
  const double s3 = l[0] + l[1] - l[2];
  if (!(l[0] > 0.0 && l[1] > 0.0 && l[2] > 0.0 && s1 > 0.0 && s2 > 0.0 && s3 > 0.0)) {
    throw Error(ErrorCode::InadmissibleFace, "lengths violate the strict triangle inequality");
  }
  const double four_area = std::sqrt((l[0] + l[1] + l[2]) * s1 * s2 * s3);
  std::array<double, 3> out{};
  for (int k = 0; k < 3; ++k) {
    const int i = (k + 1) % 3;
    const int j = (k + 2) % 3;
    out[k] = std::atan2(four_area, l[i] * l[i] + l[j] * l[j] - l[k] * l[k]);
  }
  return out;
}

std::array<double, 3> face_angles(const AugmentedDisk& aug, const ConformalStructure& cs, const Label& f, int face) {
  const auto g = kernels::evaluate_face(aug.faces()[static_cast<std::size_t>(face)], cs, f, false);
  kernels::throw_first_failure(aug, {g});
  return g.angle;
}

MetricData compute_metric(const AugmentedDisk& aug, const ConformalStructure& cs, const Label& f, Execution exec) {
  std::vector<kernels::FaceGeometry> geo;
  kernels::evaluate_faces(aug, cs, f, false, geo, exec);
  kernels::throw_first_failure(aug, geo);
  MetricData m;
  m.lengths = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(aug.num_edges()));
  m.angles.resize(geo.size());
  const auto faces = aug.faces();
  for (std::size_t i = 0; i < faces.size(); ++i) {
    m.angles[i] = geo[i].angle;
    for (int k = 0; k < 3; ++k) m.lengths[faces[i].e[k]] = geo[i].length[k];
  }
  return m;
}

CurvatureVector curvature(const AugmentedDisk& aug, const ConformalStructure& cs, const Label& f, Execution exec) {
  std::vector<kernels::FaceGeometry> geo;
  kernels::evaluate_faces(aug, cs, f, false, geo, exec);
  kernels::throw_first_failure(aug, geo);
  return reduce_curvature(aug, geo);
}

Eigen::MatrixXd curvature_jacobian(const AugmentedDisk& aug, const ConformalStructure& cs, const Label& f,
                                   Execution exec) {
  return curvature_and_jacobian(aug, cs, f, exec).J;
}

CurvatureAndJacobian curvature_and_jacobian(const AugmentedDisk& aug, const ConformalStructure& cs, const Label& f,
                                            Execution exec) {
  std::vector<kernels::FaceGeometry> geo;
  kernels::evaluate_faces(aug, cs, f, true, geo, exec);
  kernels::throw_first_failure(aug, geo);
  return {reduce_curvature(aug, geo), reduce_jacobian(aug, geo)};
}

Admissibility admissible(const AugmentedDisk& aug, const ConformalStructure& cs, const Label& f) {
  Admissibility result;
  const auto edges = aug.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const int i = edges[e].v[0];
    const int j = edges[e].v[1];
    const double sq = squared_edge_length(cs.alpha[i], cs.alpha[j], cs.eta[static_cast<Eigen::Index>(e)], f[i], f[j]);
    if (!(sq > 0.0) || !std::isfinite(sq)) {
      result.ok = false;
      result.first = Violation{ErrorCode::DegenerateEdge, static_cast<int>(e),
                               "edge " + std::to_string(aug.id(i)) + "-" + std::to_string(aug.id(j)) +
                                   " has l^2 = " + std::to_string(sq)};
      return result;
    }
  }
  const auto faces = aug.faces();
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const auto g = kernels::evaluate_face(faces[i], cs, f, false);
    if (g.status != kernels::FaceStatus::Ok) {
      result.ok = false;
      result.first = Violation{ErrorCode::InadmissibleFace, static_cast<int>(i),
                               "face " + std::to_string(i) + " violates the triangle inequality"};
      return result;
    }
  }
  return result;
}

}  // namespace duniform
