#include "duniform/kernels.hpp"

#include <cmath>
#include <string>

namespace duniform::kernels {

FaceGeometry evaluate_face(const Face& face, const ConformalStructure& cs, const Label& f, bool derivatives) {
  FaceGeometry g;
  std::array<double, 3> ef{};  // e^{f} at the corners
  for (int k = 0; k < 3; ++k) ef[k] = std::exp(f[face.v[k]]);

  std::array<double, 3> sq{};
  for (int k = 0; k < 3; ++k) {
    const int i = (k + 1) % 3;
    const int j = (k + 2) % 3;
    const double ai = cs.alpha[face.v[i]];
    const double aj = cs.alpha[face.v[j]];
    const double eta = cs.eta[face.e[k]];
    sq[k] = ai * ef[i] * ef[i] + aj * ef[j] * ef[j] + 2.0 * eta * ef[i] * ef[j];
    if (!(sq[k] > 0.0)) {
      g.status = FaceStatus::DegenerateEdge;
      g.bad_corner = k;
      return g;
    }
    g.length[k] = std::sqrt(sq[k]);
  }

  const double a = g.length[0];
  const double b = g.length[1];
  const double c = g.length[2];
  const double s1 = -a + b + c;
  const double s2 = a - b + c;
  const double s3 = a + b - c;
  if (!(s1 > 0.0 && s2 > 0.0 && s3 > 0.0)) {
    g.status = FaceStatus::Inadmissible;
    return g;
  }
  const double four_area = std::sqrt((a + b + c) * s1 * s2 * s3);
  for (int k = 0; k < 3; ++k) {
    const double adj = sq[(k + 1) % 3] + sq[(k + 2) % 3] - sq[k];
    g.angle[k] = std::atan2(four_area, adj);
  }
  if (!derivatives) return g;

  // d angle_k / d l_j: l_k/(2A) on the diagonal, -(l_k^2 + l_j^2 - l_m^2)/(4 A l_j) off it.
  std::array<std::array<double, 3>, 3> dtheta_dl{};
  const double two_area = 0.5 * four_area;
  for (int k = 0; k < 3; ++k) {
    for (int j = 0; j < 3; ++j) {
      if (j == k) {
        dtheta_dl[k][j] = g.length[k] / two_area;
      } else {
        const int m = 3 - k - j;
        dtheta_dl[k][j] = -(sq[k] + sq[j] - sq[m]) / (four_area * g.length[j]);
      }
    }
  }
  // d l_j / d f_{v[m]} for m != j: (alpha_m e^{2 f_m} + eta_j e^{f_m + f_o}) / l_j.
  std::array<std::array<double, 3>, 3> dl_df{};
  for (int j = 0; j < 3; ++j) {
    for (int m = 0; m < 3; ++m) {
      if (m == j) continue;
      const int o = 3 - j - m;
      const double am = cs.alpha[face.v[m]];
      dl_df[j][m] = (am * ef[m] * ef[m] + cs.eta[face.e[j]] * ef[m] * ef[o]) / g.length[j];
    }
  }
  for (int k = 0; k < 3; ++k) {
    for (int m = 0; m < 3; ++m) {
      double s = 0.0;
      for (int j = 0; j < 3; ++j) s += dtheta_dl[k][j] * dl_df[j][m];
      g.dangle[k][m] = s;
    }
  }
  return g;
}

void evaluate_faces_serial(const AugmentedDisk& aug, const ConformalStructure& cs, const Label& f,
                           bool derivatives, std::vector<FaceGeometry>& out) {
  const auto faces = aug.faces();
  out.resize(faces.size());
  for (std::size_t i = 0; i < faces.size(); ++i) out[i] = evaluate_face(faces[i], cs, f, derivatives);
}

void evaluate_faces_parallel(const AugmentedDisk& aug, const ConformalStructure& cs, const Label& f,
                             bool derivatives, std::vector<FaceGeometry>& out) {
  const auto faces = aug.faces();
  out.resize(faces.size());
  const auto n = static_cast<std::ptrdiff_t>(faces.size());
#pragma omp parallel for schedule(static) if (n > 256)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = evaluate_face(faces[static_cast<std::size_t>(i)], cs, f, derivatives);
  }
}

void throw_first_failure(const AugmentedDisk& aug, const std::vector<FaceGeometry>& geo) {
  const auto faces = aug.faces();
  for (std::size_t i = 0; i < geo.size(); ++i) {
    const auto& face = faces[i];
    if (geo[i].status == FaceStatus::DegenerateEdge) {
      const auto& e = aug.edges()[static_cast<std::size_t>(face.e[geo[i].bad_corner])];
      throw Error(ErrorCode::DegenerateEdge, "edge " + std::to_string(face.e[geo[i].bad_corner]) + " (" +
                                                 std::to_string(aug.id(e.v[0])) + "-" + std::to_string(aug.id(e.v[1])) +
                                                 ") has l^2 <= 0");
    }
    if (geo[i].status == FaceStatus::Inadmissible) {
      throw Error(ErrorCode::InadmissibleFace, "face " + std::to_string(i) + " (" + std::to_string(aug.id(face.v[0])) +
                                                   "," + std::to_string(aug.id(face.v[1])) + "," +
                                                   std::to_string(aug.id(face.v[2])) +
                                                   ") violates the triangle inequality");
    }
  }
}

}  // namespace duniform::kernels
