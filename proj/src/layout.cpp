#include "duniform/layout.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>

#include "duniform/kernels.hpp"

namespace duniform {

namespace {

Vec2 place_third(const Vec2& pi, const Vec2& pj, double l_ik, double l_jk, double sign) {
  const Vec2 d = pj - pi;
  const double len = d.norm();
  const Vec2 e = d / len;
  const Vec2 perp(-e.y(), e.x());
  const double a = (l_ik * l_ik - l_jk * l_jk + len * len) / (2.0 * len);
  const double h = std::sqrt(std::max(l_ik * l_ik - a * a, 0.0));
  return pi + a * e + sign * h * perp;
}

struct Developer {
  const AugmentedDisk& aug;
  const Eigen::VectorXd& lengths;
  std::vector<char> allowed;
  Traversal traversal;

  std::vector<Vec2> pos;
  std::vector<char> placed;
  double spread = 0.0;

  void place_corner(const Face& face, int c) {
    const int k = face.v[c];
    const int i = face.v[(c + 1) % 3];
    const int j = face.v[(c + 2) % 3];
    const double l_ik = lengths[face.e[(c + 2) % 3]];
    const double l_jk = lengths[face.e[(c + 1) % 3]];
    const Vec2 cand = place_third(pos[static_cast<std::size_t>(i)], pos[static_cast<std::size_t>(j)], l_ik, l_jk,
                                  static_cast<double>(face.sign()));
    auto ku = static_cast<std::size_t>(k);
    if (placed[ku]) {
      spread = std::max(spread, (cand - pos[ku]).norm());
    } else {
      pos[ku] = cand;
      placed[ku] = 1;
    }
  }

  // Apex faces (if allowed) are exhausted before any disk face is expanded.
  void run(int start) {
    const auto faces = aug.faces();
    std::vector<char> visited(faces.size(), 0);
    std::deque<int> primary;    // apex faces
    std::deque<int> secondary;  // disk faces
    auto push = [&](int f) {
      visited[static_cast<std::size_t>(f)] = 1;
      (faces[static_cast<std::size_t>(f)].cls == SimplexClass::Augmented ? primary : secondary).push_back(f);
    };
    auto pop = [&](std::deque<int>& q) {
      int f;
      if (traversal == Traversal::BreadthFirst) {
        f = q.front();
        q.pop_front();
      } else {
        f = q.back();
        q.pop_back();
      }
      return f;
    };
    push(start);
    while (!primary.empty() || !secondary.empty()) {
      const int f = !primary.empty() ? pop(primary) : pop(secondary);
      const Face& face = faces[static_cast<std::size_t>(f)];
      for (int k = 0; k < 3; ++k) {
        const auto ef = aug.edge_faces(face.e[k]);
        const int g = ef[0] == f ? ef[1] : ef[0];
        if (g < 0 || !allowed[static_cast<std::size_t>(g)]) continue;
        const Face& other = faces[static_cast<std::size_t>(g)];
        // Corner of g opposite the shared edge.
        int c = 0;
        while (other.e[c] != face.e[k]) ++c;
        place_corner(other, c);
        if (!visited[static_cast<std::size_t>(g)]) push(g);
      }
    }
  }
};

void finish(PlaneLayout& out, const AugmentedDisk& aug, const Eigen::VectorXd& lengths, double spread,
            std::size_t edge_count) {
  Vec2 lo = out.positions.front();
  Vec2 hi = lo;
  for (const auto& p : out.positions) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  out.diameter = (hi - lo).norm();
  out.consistency_residual = out.diameter > 0.0 ? spread / out.diameter : spread;
  const auto edges = aug.edges();
  for (std::size_t e = 0; e < edge_count; ++e) {
    const double d = (out.positions[static_cast<std::size_t>(edges[e].v[0])] -
                      out.positions[static_cast<std::size_t>(edges[e].v[1])]).norm();
    const double l = lengths[static_cast<Eigen::Index>(e)];
    out.max_edge_error = std::max(out.max_edge_error, std::abs(d - l) / l);
  }
}

std::string fmt(double x) { return std::to_string(x); }

}  // namespace

PlaneLayout layout_disk(const AugmentedDisk& aug, const ConformalStructure& cs, const Label& f,
                        const LayoutOptions& opts) {
  const auto& base = aug.base();
  const auto faces = aug.faces();
  const std::size_t nf = aug.num_disk_faces();

  std::vector<kernels::FaceGeometry> geo(nf);
  for (std::size_t i = 0; i < nf; ++i) geo[i] = kernels::evaluate_face(faces[i], cs, f, false);
  kernels::throw_first_failure(aug, geo);

  Eigen::VectorXd lengths = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(aug.num_edges()));
  std::vector<double> angle_sum(base.num_vertices(), 0.0);
  for (std::size_t i = 0; i < nf; ++i) {
    for (int k = 0; k < 3; ++k) {
      lengths[faces[i].e[k]] = geo[i].length[k];
      angle_sum[static_cast<std::size_t>(faces[i].v[k])] += geo[i].angle[k];
    }
  }
  double worst = 0.0;
  for (std::size_t v = 0; v < base.num_vertices(); ++v) {
    if (!base.is_boundary_vertex(static_cast<int>(v))) {
      worst = std::max(worst, std::abs(2.0 * std::numbers::pi - angle_sum[v]));
    }
  }
  if (worst > opts.flat_tol) throw Error(ErrorCode::NotFlat, "max interior |K| = " + fmt(worst));

  Developer dev{aug, lengths, std::vector<char>(faces.size(), 0), opts.traversal, {}, {}, 0.0};
  for (std::size_t i = 0; i < nf; ++i) dev.allowed[i] = 1;
  dev.pos.assign(base.num_vertices(), Vec2::Zero());
  dev.placed.assign(base.num_vertices(), 0);

  const Face& first = faces[0];
  dev.pos[static_cast<std::size_t>(first.v[0])] = Vec2::Zero();
  dev.pos[static_cast<std::size_t>(first.v[1])] = Vec2(lengths[first.e[2]], 0.0);
  dev.placed[static_cast<std::size_t>(first.v[0])] = 1;
  dev.placed[static_cast<std::size_t>(first.v[1])] = 1;
  dev.place_corner(first, 2);
  dev.run(0);

  PlaneLayout out;
  out.positions = std::move(dev.pos);
  out.augmented = false;
  finish(out, aug, lengths, dev.spread, aug.num_disk_edges());
  return out;
}

PlaneLayout layout_augmented(const AugmentedDisk& aug, const ConformalStructure& cs, const Label& f,
                             const LayoutOptions& opts) {
  const MetricData metric = compute_metric(aug, cs, f);
  const CurvatureVector K = curvature(aug, cs, f);
  const int apex = aug.apex();
  if (std::abs(K[apex]) > opts.flat_tol) {
    throw Error(ErrorCode::FanNotClosed, "|K(apex)| = " + fmt(std::abs(K[apex])));
  }
  const double worst = K.cwiseAbs().maxCoeff();
  if (worst > opts.flat_tol) throw Error(ErrorCode::NotFlat, "max |K| = " + fmt(worst));

  const auto faces = aug.faces();
  Developer dev{aug, metric.lengths, std::vector<char>(faces.size(), 1), opts.traversal, {}, {}, 0.0};
  dev.pos.assign(aug.num_vertices(), Vec2::Zero());
  dev.placed.assign(aug.num_vertices(), 0);

  const int start = static_cast<int>(aug.num_disk_faces());
  const Face& first = faces[static_cast<std::size_t>(start)];  // (w, u, apex)
  dev.pos[static_cast<std::size_t>(apex)] = Vec2::Zero();
  dev.placed[static_cast<std::size_t>(apex)] = 1;
  // The edge (apex, w) is opposite u, which is corner 1.
  dev.pos[static_cast<std::size_t>(first.v[0])] = Vec2(metric.lengths[first.e[1]], 0.0);
  dev.placed[static_cast<std::size_t>(first.v[0])] = 1;
  dev.place_corner(first, 1);
  dev.run(start);

  PlaneLayout out;
  out.positions = std::move(dev.pos);
  out.augmented = true;
  finish(out, aug, metric.lengths, dev.spread, aug.num_edges());
  return out;
}

std::vector<MPoint> realize_mpoints(const PlaneLayout& layout, const ConformalStructure& cs, const Label& f) {
  std::vector<MPoint> xi;
  xi.reserve(layout.positions.size());
  for (std::size_t v = 0; v < layout.positions.size(); ++v) {
    const auto i = static_cast<Eigen::Index>(v);
    const Vec2& p = layout.positions[v];
    const double s = std::exp(-f[i]);
    const double x = p.squaredNorm() - cs.alpha[i] * std::exp(2.0 * f[i]);
    xi.emplace_back(s * p.x(), s * p.y(), 0.5 * s * (x - 1.0), 0.5 * s * (x + 1.0));
  }
  return xi;
}

RealizationResidual realization_residual(const AugmentedDisk& aug, const ConformalStructure& cs,
                                         const std::vector<MPoint>& xi) {
  RealizationResidual r;
  for (std::size_t v = 0; v < xi.size(); ++v) {
    const double target = cs.alpha[static_cast<Eigen::Index>(v)];
    r.vertex = std::max(r.vertex, std::abs(mprod(xi[v], xi[v]) - target) / std::max(1.0, std::abs(target)));
  }
  const auto edges = aug.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto a = static_cast<std::size_t>(edges[e].v[0]);
    const auto b = static_cast<std::size_t>(edges[e].v[1]);
    if (a >= xi.size() || b >= xi.size()) continue;
    const double target = cs.eta[static_cast<Eigen::Index>(e)];
    r.edge = std::max(r.edge, std::abs(-mprod(xi[a], xi[b]) - target) / std::max(1.0, std::abs(target)));
  }
  return r;
}

NormalizedConfiguration normalize_to_unit_disk(const AugmentedDisk& aug, const PlaneLayout& layout,
                                               const std::vector<MPoint>& mpoints) {
  if (!layout.augmented || layout.positions.empty()) {
    throw Error(ErrorCode::EmptyLayout, "normalization needs an augmented layout");
  }
  const auto apex = static_cast<std::size_t>(aug.apex());
  const WeightedPoint hat = project(mpoints[apex]);
  const LorentzMap shift = LorentzMap::translation(-hat.p);
  const double radius = hat.W > 0.0 ? std::sqrt(hat.W) : 1.0 / mpoints[apex].gap();
  const LorentzMap scale = LorentzMap::dilation(1.0 / radius);
  const LorentzMap L(scale.matrix() * shift.matrix());

  NormalizedConfiguration out;
  out.layout = layout;
  out.f.resize(static_cast<Eigen::Index>(mpoints.size()));
  for (std::size_t v = 0; v < mpoints.size(); ++v) {
    out.mpoints.push_back(apply_lorentz(L, mpoints[v]));
    out.layout.positions[v] = project(out.mpoints.back()).p;
    out.f[static_cast<Eigen::Index>(v)] = -std::log(out.mpoints.back().gap());
  }
  const double s = 1.0 / radius;
  out.layout.diameter *= s;
  return out;
}

Scenario parse_scenario(std::string_view name) {
  if (name == "tangent") return Scenario::Tangent;
  if (name == "orthogonal") return Scenario::Orthogonal;
  if (name == "inscribed") return Scenario::Inscribed;
  throw Error(ErrorCode::UnknownScenario, std::string(name));
}

std::string_view to_string(Scenario s) {
  switch (s) {
    case Scenario::Tangent: return "tangent";
    case Scenario::Orthogonal: return "orthogonal";
    case Scenario::Inscribed: return "inscribed";
  }
  return "?";
}

BoundaryReport verify_boundary_condition(const AugmentedDisk& aug, const std::vector<MPoint>& mpoints,
                                         Scenario scenario) {
  BoundaryReport r;
  r.scenario = scenario;
  for (int v : aug.base().boundary_cycle()) {
    const WeightedPoint wp = project(mpoints.at(static_cast<std::size_t>(v)));
    const double dist = wp.p.norm();
    const double rad2 = wp.W;
    double res = 0.0;
    switch (scenario) {
      case Scenario::Tangent: res = std::abs(dist + std::sqrt(std::max(rad2, 0.0)) - 1.0); break;
      case Scenario::Orthogonal: res = std::abs(dist * dist - 1.0 - rad2); break;
      case Scenario::Inscribed: res = std::abs(dist - 1.0); break;
    }
    r.vertices.push_back(v);
    r.residuals.push_back(res);
    r.max_residual = std::max(r.max_residual, res);
  }
  r.passed = r.max_residual <= 1e-9;
  return r;
}

double orientation(const PlaneLayout& layout, const Face& face) {
  const Vec2& a = layout.positions.at(static_cast<std::size_t>(face.v[0]));
  const Vec2& b = layout.positions.at(static_cast<std::size_t>(face.v[1]));
  const Vec2& c = layout.positions.at(static_cast<std::size_t>(face.v[2]));
  const Vec2 u = b - a;
  const Vec2 w = c - a;
  return u.x() * w.y() - u.y() * w.x();
}

}  // namespace duniform
