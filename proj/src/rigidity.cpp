#include "duniform/rigidity.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

#include "duniform/layout.hpp"

namespace duniform {

Eigen::MatrixXd constraint_matrix(const AugmentedDisk& aug, const std::vector<MPoint>& xi) {
  const auto nv = static_cast<Eigen::Index>(aug.num_vertices());
  const auto ne = static_cast<Eigen::Index>(aug.num_edges());
  if (static_cast<Eigen::Index>(xi.size()) != nv) {
    throw Error(ErrorCode::EmptyLayout, "need one M-weighted point per vertex of the augmented disk");
  }
  const Mat4& G = minkowski_metric();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(nv + ne, 4 * nv);
  for (Eigen::Index v = 0; v < nv; ++v) {
    m.block<1, 4>(v, 4 * v) = (G * xi[static_cast<std::size_t>(v)].xi()).transpose();
  }
  const auto edges = aug.edges();
  for (Eigen::Index e = 0; e < ne; ++e) {
    const int a = edges[static_cast<std::size_t>(e)].v[0];
    const int b = edges[static_cast<std::size_t>(e)].v[1];
    m.block<1, 4>(nv + e, 4 * a) = (G * xi[static_cast<std::size_t>(b)].xi()).transpose();
    m.block<1, 4>(nv + e, 4 * b) = (G * xi[static_cast<std::size_t>(a)].xi()).transpose();
  }
  return m;
}

RankReport numerical_rank(const Eigen::MatrixXd& m, double cutoff) {
  RankReport r;
  r.cutoff = cutoff;
  if (m.size() == 0) return r;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  r.singular_values = svd.singularValues();
  if (r.singular_values.size() == 0 || r.singular_values[0] <= 0.0) return r;
  const double floor = cutoff * r.singular_values[0];
  r.rank = static_cast<int>((r.singular_values.array() > floor).count());
  return r;
}

OrbitReport mobius_orbit_check(const AugmentedDisk& aug, const ConformalStructure& cs, const Label& f_flat,
                               const InfinitesimalMobius& g, double eps) {
  const PlaneLayout layout = layout_augmented(aug, cs, f_flat);
  const auto xi = realize_mpoints(layout, cs, f_flat);
  const Mat4 step = infinitesimal_generator(g, eps);

  OrbitReport r;
  r.transported.resize(f_flat.size());
  for (std::size_t v = 0; v < xi.size(); ++v) {
    const Vec4 moved = step * xi[v].xi();
    const double gap = moved[3] - moved[2];
    if (!(gap > 0.0)) {
      throw Error(ErrorCode::TransportNotProper, "vertex " + std::to_string(aug.id(static_cast<int>(v))));
    }
    const auto i = static_cast<Eigen::Index>(v);
    r.transported[i] = -std::log(gap);
    if (eps != 0.0) {
      const double predicted = induced_label_variation(g, layout.positions[v]);
      r.max_variation_error =
          std::max(r.max_variation_error, std::abs((r.transported[i] - f_flat[i]) / eps - predicted));
    }
  }
  r.max_curvature = curvature(aug, cs, r.transported).cwiseAbs().maxCoeff();
  return r;
}

}  // namespace duniform
