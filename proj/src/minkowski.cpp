#include "duniform/minkowski.hpp"

#include <algorithm>
#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

namespace duniform {

namespace {

void require_proper(const MPoint& xi) {
  if (!xi.proper()) {
    throw Error(ErrorCode::NotProper, "expected xi^4 - xi^3 > 0, got " + std::to_string(xi.gap()));
  }
}

double clamp_window(double c) {
  if (c > 1.0 && c <= 1.0 + kMinkowskiTol) return 1.0;
  if (c < -1.0 && c >= -1.0 - kMinkowskiTol) return -1.0;
  return c;
}

}  // namespace

MPoint::MPoint(const Vec4& xi) : xi_(xi) {
  if (xi_.isZero(0.0)) throw Error(ErrorCode::NotProper, "zero vector");
}

MPoint unit_disk_u() { return MPoint(0.0, 0.0, 1.0, 0.0); }

double mprod(const Vec4& xi, const Vec4& zeta) {
  return xi[0] * zeta[0] + xi[1] * zeta[1] + xi[2] * zeta[2] - xi[3] * zeta[3];
}

double mprod(const MPoint& xi, const MPoint& zeta) { return mprod(xi.xi(), zeta.xi()); }

WeightedPoint project(const MPoint& xi) {
  require_proper(xi);
  const double g = xi.gap();
  return {Vec2(xi[0] / g, xi[1] / g), mprod(xi, xi) / (g * g)};
}

MPoint canonical_lift(const WeightedPoint& wp) {
  const double x = wp.p.x();
  const double y = wp.p.y();
  const double s = x * x + y * y - wp.W;
  // xi^4 - xi^3 = 1 exactly: the two halves differ by one after rounding of s/2.
  const double x3 = 0.5 * (s - 1.0);
  return MPoint(x, y, x3, x3 + 1.0);
}

double point_separation_sq(const MPoint& xi, const MPoint& zeta) {
  require_proper(xi);
  require_proper(zeta);
  const Vec4 diff = xi.xi() / xi.gap() - zeta.xi() / zeta.gap();
  return mprod(diff, diff);
}

double normalized_product(const MPoint& xi, const MPoint& zeta) {
  const double xx = mprod(xi, xi);
  const double zz = mprod(zeta, zeta);
  if (!(xx > 0.0) || !(zz > 0.0)) {
    throw Error(ErrorCode::NotProper, "normalized product needs positive Minkowski squares");
  }
  return mprod(xi, zeta) / (std::sqrt(xx) * std::sqrt(zz));
}

double intersection_angle(const MPoint& xi, const MPoint& zeta) {
  const double c = clamp_window(normalized_product(xi, zeta));
  if (c > 1.0 || c < -1.0) {
    throw Error(ErrorCode::DisjointCircles, "normalized product " + std::to_string(c));
  }
  return std::acos(c);
}

double inversive_distance(const MPoint& xi, const MPoint& zeta) {
  const double c = clamp_window(normalized_product(xi, zeta));
  if (std::abs(c) <= 1.0) {
    throw Error(ErrorCode::IntersectingCircles, "normalized product " + std::to_string(c));
  }
  return std::acosh(std::abs(c));
}

double power_of_point(const MPoint& xi, const MPoint& zeta) {
  const double scale = xi.xi().cwiseAbs().maxCoeff();
  if (std::abs(mprod(xi, xi)) > kMinkowskiTol * scale * scale) {
    throw Error(ErrorCode::NotNull, "xi*xi = " + std::to_string(mprod(xi, xi)));
  }
  return point_separation_sq(xi, zeta) - project(zeta).W;
}

const Mat4& minkowski_metric() {
  static const Mat4 g = Eigen::Vector4d(1.0, 1.0, 1.0, -1.0).asDiagonal();
  return g;
}

double LorentzMap::defect(const Mat4& m) {
  const Mat4& g = minkowski_metric();
  return (m.transpose() * g * m - g).cwiseAbs().maxCoeff();
}

LorentzMap::LorentzMap(const Mat4& m) : m_(m) {
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double d = defect(m);
  if (!(d <= kMinkowskiTol * scale * scale)) {
    throw Error(ErrorCode::NotLorentz, "defect " + std::to_string(d));
  }
}

LorentzMap LorentzMap::identity() { return LorentzMap(Mat4::Identity(), Unchecked{}); }

LorentzMap LorentzMap::rotation(double angle) {
  Mat4 m = Mat4::Identity();
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  m(0, 0) = c;
  m(0, 1) = -s;
  m(1, 0) = s;
  m(1, 1) = c;
  return LorentzMap(m, Unchecked{});
}

LorentzMap LorentzMap::translation(const Vec2& a) {
  const double h = 0.5 * a.squaredNorm();
  Mat4 m;
  m << 1.0, 0.0, -a.x(), a.x(),
       0.0, 1.0, -a.y(), a.y(),
       a.x(), a.y(), 1.0 - h, h,
       a.x(), a.y(), -h, 1.0 + h;
  return LorentzMap(m, Unchecked{});
}

LorentzMap LorentzMap::dilation(double s) {
  if (!(s > 0.0)) throw Error(ErrorCode::NotLorentz, "dilation factor must be positive");
  const double ch = 0.5 * (s + 1.0 / s);
  const double sh = 0.5 * (s - 1.0 / s);
  Mat4 m = Mat4::Identity();
  m(2, 2) = ch;
  m(2, 3) = sh;
  m(3, 2) = sh;
  m(3, 3) = ch;
  return LorentzMap(m, Unchecked{});
}

MPoint apply_lorentz(const LorentzMap& L, const MPoint& xi) { return MPoint(L.matrix() * xi.xi()); }

Mat4 generator_matrix(const InfinitesimalMobius& g) {
  Mat4 m;
  m << 0.0, g.r, -g.b, -g.a,
       -g.r, 0.0, -g.d, -g.c,
       g.b, g.d, 0.0, g.t,
       -g.a, -g.c, g.t, 0.0;
  return m;
}

Mat4 infinitesimal_generator(const InfinitesimalMobius& g, double eps) {
  return Mat4::Identity() + eps * generator_matrix(g);
}

LorentzMap exp_generator(const InfinitesimalMobius& g, double eps) {
  const Mat4 m = (eps * generator_matrix(g)).exp();
  return LorentzMap(m);
}

double induced_label_variation(const InfinitesimalMobius& g, const Vec2& p) {
  return (g.a + g.b) * p.x() + (g.c + g.d) * p.y() + g.t;
}

}  // namespace duniform
