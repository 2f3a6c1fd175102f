#pragma once

// Rigidity experiments: the differential of the constraint map xi -> (xi_v*xi_v, xi_v*xi_w),
// its numerical rank, and transport of flat labels along infinitesimal Mobius maps.

#include <vector>

#include <Eigen/Core>

#include "duniform/conformal.hpp"
#include "duniform/minkowski.hpp"

namespace duniform {

/// (V + E) x 4V matrix. Row v holds (G xi_v)^T in column block v; the row of edge vw holds
/// (G xi_w)^T in block v and (G xi_v)^T in block w. The factor 2 of d(xi*xi) is omitted.
Eigen::MatrixXd constraint_matrix(const AugmentedDisk& aug, const std::vector<MPoint>& xi);

struct RankReport {
  int rank = 0;
  Eigen::VectorXd singular_values;  // descending
  double cutoff = 0.0;
};

/// Number of singular values above cutoff * sigma_max.
RankReport numerical_rank(const Eigen::MatrixXd& m, double cutoff = 1e-10);

struct OrbitReport {
  Label transported;              // f' = -log(xi'^4 - xi'^3)
  double max_curvature = 0.0;     // max |K(f')|
  double max_variation_error = 0.0;  // max |(f' - f)/eps - delta f(p_v)|
};

/// Applies I + eps M(g) to the realized M-points of the augmented layout of f_flat and reads the
/// label back. Throws TransportNotProper if some transported point leaves R^4_perp.
OrbitReport mobius_orbit_check(const AugmentedDisk& aug, const ConformalStructure& cs, const Label& f_flat,
                               const InfinitesimalMobius& g, double eps);

}  // namespace duniform
