#pragma once

// M-weighted points: circles, points and imaginary circles in the plane encoded as
// vectors of R^4 with the Minkowski product  x*z = x1 z1 + x2 z2 + x3 z3 - x4 z4.
//
// Orientation: canonical_lift sends the unit circle to (0,0,-1,0). The vector
// U = (0,0,1,0) is the opposite orientation and is not a proper M-weighted point.

#include <Eigen/Core>

#include "duniform/error.hpp"

namespace duniform {

using Vec2 = Eigen::Vector2d;
using Vec4 = Eigen::Vector4d;
using Mat4 = Eigen::Matrix4d;

/// Relative tolerance for nullity and Lorentz defects.
inline constexpr double kMinkowskiTol = 1e-12;

class MPoint {
 public:
  /// Throws NotProper if xi is the zero vector.
  explicit MPoint(const Vec4& xi);
  MPoint(double x1, double x2, double x3, double x4) : MPoint(Vec4(x1, x2, x3, x4)) {}

  const Vec4& xi() const noexcept { return xi_; }
  double operator[](int i) const { return xi_[i]; }

  /// xi^4 - xi^3; positive exactly when the point lies in R^4_perp.
  double gap() const noexcept { return xi_[3] - xi_[2]; }
  bool proper() const noexcept { return gap() > 0.0; }

 private:
  Vec4 xi_;
};

/// The unit disk in the orientation used by the boundary predicate, (0,0,1,0).
MPoint unit_disk_u();

struct WeightedPoint {
  Vec2 p = Vec2::Zero();
  double W = 0.0;
};

double mprod(const MPoint& xi, const MPoint& zeta);
double mprod(const Vec4& xi, const Vec4& zeta);

/// (p(xi), W(xi)); throws NotProper unless xi^4 > xi^3.
WeightedPoint project(const MPoint& xi);

/// Representative with xi^4 - xi^3 = 1.
MPoint canonical_lift(const WeightedPoint& wp);

/// |p(xi) - p(zeta)|^2 via the Minkowski square of the normalized difference.
double point_separation_sq(const MPoint& xi, const MPoint& zeta);

/// xi*zeta / (sqrt(xi*xi) sqrt(zeta*zeta)); both squares must be positive.
double normalized_product(const MPoint& xi, const MPoint& zeta);

/// Angle in [0, pi] with cos(theta) equal to the normalized product.
/// Throws DisjointCircles when |normalized product| > 1 (beyond the clamp window).
double intersection_angle(const MPoint& xi, const MPoint& zeta);

/// Inversive distance delta > 0 with cosh(delta) = |normalized product|.
/// Throws IntersectingCircles when |normalized product| <= 1.
double inversive_distance(const MPoint& xi, const MPoint& zeta);

/// Power of the point p(xi) with respect to the circle of zeta: |p - p(zeta)|^2 - W(zeta).
/// Throws NotNull if xi is not a null vector.
double power_of_point(const MPoint& xi, const MPoint& zeta);

class LorentzMap {
 public:
  /// Throws NotLorentz if m^T G m differs from G by more than the tolerance.
  explicit LorentzMap(const Mat4& m);

  static LorentzMap identity();
  /// Rotation of the plane about the origin; preserves weights.
  static LorentzMap rotation(double angle);
  /// Translation of the plane by a; preserves weights.
  static LorentzMap translation(const Vec2& a);
  /// Dilation of the plane by s > 0 about the origin; W scales by s^2.
  static LorentzMap dilation(double s);

  const Mat4& matrix() const noexcept { return m_; }

  /// Max-norm of m^T G m - G.
  static double defect(const Mat4& m);

 private:
  struct Unchecked {};
  LorentzMap(const Mat4& m, Unchecked) : m_(m) {}
  Mat4 m_;
};

/// diag(1, 1, 1, -1)
const Mat4& minkowski_metric();

MPoint apply_lorentz(const LorentzMap& L, const MPoint& xi);

/// Parameters of a first-order Mobius perturbation of the identity.
struct InfinitesimalMobius {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  double t = 0.0;
  double r = 0.0;
};

/// Lie algebra element M with I + eps M the first-order family. G M is antisymmetric.
Mat4 generator_matrix(const InfinitesimalMobius& g);

/// I + eps M, as a raw matrix; Lorentz only up to O(eps^2).
Mat4 infinitesimal_generator(const InfinitesimalMobius& g, double eps);

/// exp(eps M), an exact Lorentz map.
LorentzMap exp_generator(const InfinitesimalMobius& g, double eps);

/// Derivative of the label f = -log(xi^4 - xi^3) at plane position p along g.
double induced_label_variation(const InfinitesimalMobius& g, const Vec2& p);

}  // namespace duniform
