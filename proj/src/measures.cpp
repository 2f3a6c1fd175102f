#include "duniform/measures.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <numbers>
#include <set>

namespace duniform {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<int> iota_vec(std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i);
  return v;
}

std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> set_intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool contains(const std::vector<int>& sorted, int x) { return std::binary_search(sorted.begin(), sorted.end(), x); }

double cross(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

double segment_distance(const Vec2& q, const Vec2& a, const Vec2& b) {
  const Vec2 d = b - a;
  const double len2 = d.squaredNorm();
  double t = len2 > 0.0 ? (q - a).dot(d) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return (a + t * d - q).norm();
}

bool in_closed_triangle(const Vec2& q, const Vec2& a, const Vec2& b, const Vec2& c, double tol) {
  if (segment_distance(q, a, b) <= tol || segment_distance(q, b, c) <= tol || segment_distance(q, c, a) <= tol) {
    return true;
  }
  const double d1 = cross(b - a, q - a);
  const double d2 = cross(c - b, q - b);
  const double d3 = cross(a - c, q - c);
  return (d1 > 0 && d2 > 0 && d3 > 0) || (d1 < 0 && d2 < 0 && d3 < 0);
}

}  // namespace

SubComplex whole_complex(const AugmentedDisk& aug) {
  return {iota_vec(aug.num_vertices()), iota_vec(aug.num_edges()), iota_vec(aug.num_faces())};
}

SubComplex disk_part(const AugmentedDisk& aug) {
  return {iota_vec(aug.base().num_vertices()), iota_vec(aug.num_disk_edges()), iota_vec(aug.num_disk_faces())};
}

SubComplex face_closure(const AugmentedDisk& aug, std::span<const int> faces) {
  std::set<int> v;
  std::set<int> e;
  std::set<int> f;
  for (int i : faces) {
    const auto& face = aug.faces()[static_cast<std::size_t>(i)];
    f.insert(i);
    for (int k = 0; k < 3; ++k) {
      v.insert(face.v[k]);
      e.insert(face.e[k]);
    }
  }
  return {{v.begin(), v.end()}, {e.begin(), e.end()}, {f.begin(), f.end()}};
}

SubComplex unite(const SubComplex& a, const SubComplex& b) {
  return {set_union(a.vertices, b.vertices), set_union(a.edges, b.edges), set_union(a.faces, b.faces)};
}

SubComplex intersect(const SubComplex& a, const SubComplex& b) {
  return {set_intersection(a.vertices, b.vertices), set_intersection(a.edges, b.edges),
          set_intersection(a.faces, b.faces)};
}

void require_subcomplex(const AugmentedDisk& aug, const SubComplex& x) {
  auto in_range = [](const std::vector<int>& s, std::size_t n) {
    return std::is_sorted(s.begin(), s.end()) && std::adjacent_find(s.begin(), s.end()) == s.end() &&
           std::all_of(s.begin(), s.end(), [n](int i) { return i >= 0 && static_cast<std::size_t>(i) < n; });
  };
  if (!in_range(x.vertices, aug.num_vertices()) || !in_range(x.edges, aug.num_edges()) ||
      !in_range(x.faces, aug.num_faces())) {
    throw Error(ErrorCode::NotSubcomplex, "index sets must be sorted, unique and in range");
  }
  for (int e : x.edges) {
    for (int v : aug.edges()[static_cast<std::size_t>(e)].v) {
      if (!contains(x.vertices, v)) throw Error(ErrorCode::NotSubcomplex, "edge " + std::to_string(e) + " misses a vertex");
    }
  }
  for (int f : x.faces) {
    for (int e : aug.faces()[static_cast<std::size_t>(f)].e) {
      if (!contains(x.edges, e)) throw Error(ErrorCode::NotSubcomplex, "face " + std::to_string(f) + " misses an edge");
    }
  }
}

MultiplicitySurface make_multiplicity_surface(const AugmentedDisk& aug, MultiplicityAssignment mu, MetricData metric) {
  require_complete(aug, mu);
  if (metric.angles.size() != aug.num_faces()) {
    throw Error(ErrorCode::MissingMultiplicity, "metric does not cover every face");
  }
  return {&aug, std::move(mu), std::move(metric)};
}

double measure_curvature(const MultiplicitySurface& ms, int v, const SubComplex& part) {
  const auto& aug = *ms.complex;
  require_complete(aug, ms.mu);
  double k = 0.0;
  if (contains(part.vertices, v)) k += 2.0 * kPi * ms.mu.vertices[static_cast<std::size_t>(v)];
  for (int e : aug.vertex_edges(v)) {
    if (contains(part.edges, e)) k += kPi * ms.mu.edges[static_cast<std::size_t>(e)];
  }
  for (int f : aug.vertex_faces(v)) {
    if (!contains(part.faces, f)) continue;
    const auto& face = aug.faces()[static_cast<std::size_t>(f)];
    const double theta = ms.metric.angles[static_cast<std::size_t>(f)][static_cast<std::size_t>(face.corner(v))];
    k += (kPi - theta) * ms.mu.faces[static_cast<std::size_t>(f)];
  }
  return k;
}

double measure_curvature(const MultiplicitySurface& ms, int v) {
  return measure_curvature(ms, v, whole_complex(*ms.complex));
}

double measure_equivalence_check(const AugmentedDisk& aug, const ConformalStructure& cs, const Label& f) {
  const auto ms = make_multiplicity_surface(aug, standard_multiplicities(aug), compute_metric(aug, cs, f));
  const CurvatureVector K = curvature(aug, cs, f);
  const auto all = whole_complex(aug);
  double dev = 0.0;
  for (Eigen::Index v = 0; v < K.size(); ++v) {
    dev = std::max(dev, std::abs(measure_curvature(ms, static_cast<int>(v), all) - K[v]));
  }
  return dev;
}

ValuationReport valuation_check(const MultiplicitySurface& ms, int v, const SubComplex& a, const SubComplex& b) {
  const auto& aug = *ms.complex;
  require_subcomplex(aug, a);
  require_subcomplex(aug, b);
  ValuationReport r;
  r.union_value = measure_curvature(ms, v, unite(a, b));
  r.a_value = measure_curvature(ms, v, a);
  r.b_value = measure_curvature(ms, v, b);
  r.intersection_value = measure_curvature(ms, v, intersect(a, b));
  r.defect = std::abs(r.union_value - r.a_value - r.b_value + r.intersection_value);
  r.holds = r.defect <= 1e-12;
  return r;
}

int covered_multiplicity(const AugmentedDisk& aug, const MultiplicityAssignment& mu, std::span<const Vec2> positions,
                         const Vec2& q, double tol) {
  require_complete(aug, mu);
  if (positions.size() != aug.num_vertices()) throw Error(ErrorCode::EmptyLayout, "positions do not cover the complex");
  int total = 0;
  for (std::size_t v = 0; v < positions.size(); ++v) {
    if ((positions[v] - q).norm() <= tol) total += mu.vertices[v];
  }
  const auto edges = aug.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& p0 = positions[static_cast<std::size_t>(edges[e].v[0])];
    const auto& p1 = positions[static_cast<std::size_t>(edges[e].v[1])];
    if (segment_distance(q, p0, p1) <= tol) total += mu.edges[e];
  }
  const auto faces = aug.faces();
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& t = faces[f].v;
    if (in_closed_triangle(q, positions[static_cast<std::size_t>(t[0])], positions[static_cast<std::size_t>(t[1])],
                           positions[static_cast<std::size_t>(t[2])], tol)) {
      total += mu.faces[f];
    }
  }
  return total;
}

}  // namespace duniform
