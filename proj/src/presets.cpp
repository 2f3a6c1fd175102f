#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <tuple>

#include "duniform/io.hpp"

namespace duniform {

namespace {

int hex_distance(int q, int r) { return (std::abs(q) + std::abs(r) + std::abs(q + r)) / 2; }

struct Scalars {
  double alpha;
  double eta;
  double mu;
};

Scalars scenario_scalars(Scenario s) {
  switch (s) {
    case Scenario::Tangent: return {1.0, 1.0, -1.0};
    case Scenario::Orthogonal: return {1.0, 1.0, 0.0};
    case Scenario::Inscribed: return {0.0, 0.5, 0.0};
  }
  return {1.0, 1.0, -1.0};
}

json uniform_problem(const RawMesh& mesh, Scenario s) {
  // Validation gives the edge set and the boundary.
  const CombinatorialDisk disk = validate_disk(mesh);
  const Scalars k = scenario_scalars(s);

  json doc;
  doc["vertices"] = mesh.vertices;
  doc["faces"] = json::array();
  for (const auto& t : mesh.faces) doc["faces"].push_back({t[0], t[1], t[2]});

  json alpha = json::object();
  for (VertexId id : mesh.vertices) alpha[std::to_string(id)] = k.alpha;
  alpha["hat"] = 1.0;
  doc["alpha"] = alpha;

  json eta = json::object();
  for (const auto& e : disk.edges()) {
    VertexId a = disk.id(e[0]);
    VertexId b = disk.id(e[1]);
    if (a > b) std::swap(a, b);
    eta[std::to_string(a) + "-" + std::to_string(b)] = k.eta;
  }
  doc["eta"] = eta;

  json mu = json::object();
  for (int v : disk.boundary_cycle()) mu[std::to_string(disk.id(v))] = k.mu;
  doc["mu"] = mu;
  doc["scenario"] = std::string(to_string(s));
  return doc;
}

}  // namespace

RawMesh ring_lattice_mesh(int rings) {
  if (rings < 1) throw Error(ErrorCode::UnknownPreset, "ring_lattice needs at least one ring");

  // Axial lattice coordinates; (q, r) sits at (q + r/2, r sqrt(3)/2).
  std::vector<std::pair<int, int>> points;
  for (int q = -rings; q <= rings; ++q) {
    for (int r = -rings; r <= rings; ++r) {
      if (hex_distance(q, r) <= rings) points.emplace_back(q, r);
    }
  }
  auto angle = [](const std::pair<int, int>& p) {
    const double x = p.first + 0.5 * p.second;
    const double y = 0.5 * std::numbers::sqrt3 * p.second;
    double a = std::atan2(y, x);
    if (a < 0.0) a += 2.0 * std::numbers::pi;
    return a;
  };
  std::sort(points.begin(), points.end(), [&](const auto& a, const auto& b) {
    const int da = hex_distance(a.first, a.second);
    const int db = hex_distance(b.first, b.second);
    if (da != db) return da < db;
    if (da == 0) return false;
    return angle(a) < angle(b);
  });

  std::map<std::pair<int, int>, VertexId> id;
  RawMesh mesh;
  for (const auto& p : points) {
    id[p] = static_cast<VertexId>(mesh.vertices.size());
    mesh.vertices.push_back(id[p]);
  }
  auto inside = [&](int q, int r) { return hex_distance(q, r) <= rings; };
  // Anchors of down triangles may lie outside the disk.
  for (int q = -rings - 1; q <= rings; ++q) {
    for (int r = -rings - 1; r <= rings; ++r) {
      if (inside(q, r) && inside(q + 1, r) && inside(q, r + 1)) {
        mesh.faces.push_back({id[{q, r}], id[{q + 1, r}], id[{q, r + 1}]});
      }
      if (inside(q + 1, r) && inside(q + 1, r + 1) && inside(q, r + 1)) {
        mesh.faces.push_back({id[{q + 1, r}], id[{q + 1, r + 1}], id[{q, r + 1}]});
      }
    }
  }
  return mesh;
}

json preset(std::string_view name, const PresetParams& params) {
  if (name == "hex_tangent") return uniform_problem(ring_lattice_mesh(1), Scenario::Tangent);
  if (name == "hex_orthogonal") return uniform_problem(ring_lattice_mesh(1), Scenario::Orthogonal);
  if (name == "hex_inscribed") return uniform_problem(ring_lattice_mesh(1), Scenario::Inscribed);
  if (name == "ring_lattice") {
    return uniform_problem(ring_lattice_mesh(params.rings), params.scenario.value_or(Scenario::Tangent));
  }
  if (name == "triangle") {
    RawMesh mesh{{0, 1, 2}, {{0, 1, 2}}};
    return uniform_problem(mesh, params.scenario.value_or(Scenario::Tangent));
  }
  throw Error(ErrorCode::UnknownPreset, std::string(name));
}

}  // namespace duniform
