#include "duniform/complex.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>

namespace duniform {

namespace {

std::uint64_t edge_key(int a, int b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

std::string face_str(std::size_t f) { return "face " + std::to_string(f); }

// Does face (a, b, c) traverse the directed edge u -> w?
bool has_directed(const std::array<int, 3>& f, int u, int w) {
  for (int k = 0; k < 3; ++k) {
    if (f[k] == u && f[(k + 1) % 3] == w) return true;
  }
  return false;
}

}  // namespace

int CombinatorialDisk::index_of(VertexId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw Error(ErrorCode::UnknownVertex, "vertex id " + std::to_string(id));
  return it->second;
}

int CombinatorialDisk::edge_index(int a, int b) const {
  auto it = edge_lookup_.find(edge_key(a, b));
  return it == edge_lookup_.end() ? -1 : it->second;
}

CombinatorialDisk validate_disk(const RawMesh& mesh) {
  CombinatorialDisk disk;
  if (mesh.faces.empty()) throw Error(ErrorCode::NonDisk, "no faces");

  disk.ids_ = mesh.vertices;
  for (std::size_t i = 0; i < disk.ids_.size(); ++i) {
    if (!disk.index_.emplace(disk.ids_[i], static_cast<int>(i)).second) {
      throw Error(ErrorCode::ImproperTriangulation, "duplicate vertex id " + std::to_string(disk.ids_[i]));
    }
  }

  const std::size_t nf = mesh.faces.size();
  std::vector<std::array<int, 3>> faces(nf);
  std::set<std::array<int, 3>> seen;
  for (std::size_t f = 0; f < nf; ++f) {
    for (int k = 0; k < 3; ++k) faces[f][k] = disk.index_of(mesh.faces[f][k]);
    const auto& t = faces[f];
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
      throw Error(ErrorCode::ImproperTriangulation, "degenerate " + face_str(f));
    }
    auto sorted = t;
    std::sort(sorted.begin(), sorted.end());
    if (!seen.insert(sorted).second) {
      throw Error(ErrorCode::ImproperTriangulation, "duplicate " + face_str(f));
    }
  }

  // Edges in order of first appearance.
  std::vector<std::vector<int>> edge_faces;
  for (std::size_t f = 0; f < nf; ++f) {
    for (int k = 0; k < 3; ++k) {
      const int a = faces[f][k];
      const int b = faces[f][(k + 1) % 3];
      auto [it, inserted] = disk.edge_lookup_.emplace(edge_key(a, b), static_cast<int>(disk.edges_.size()));
      if (inserted) {
        disk.edges_.push_back({std::min(a, b), std::max(a, b)});
        edge_faces.emplace_back();
      }
      edge_faces[static_cast<std::size_t>(it->second)].push_back(static_cast<int>(f));
    }
  }
  for (std::size_t e = 0; e < disk.edges_.size(); ++e) {
    if (edge_faces[e].size() > 2) {
      throw Error(ErrorCode::NonManifoldEdge, "edge " + std::to_string(disk.ids_[disk.edges_[e][0]]) + "-" +
                                                  std::to_string(disk.ids_[disk.edges_[e][1]]) + " lies in " +
                                                  std::to_string(edge_faces[e].size()) + " faces");
    }
  }

  const std::size_t nv = disk.ids_.size();
  std::vector<std::vector<int>> vertex_faces(nv);
  for (std::size_t f = 0; f < nf; ++f) {
    for (int v : faces[f]) vertex_faces[static_cast<std::size_t>(v)].push_back(static_cast<int>(f));
  }
  for (std::size_t v = 0; v < nv; ++v) {
    if (vertex_faces[v].empty()) {
      throw Error(ErrorCode::NonDisk, "vertex " + std::to_string(disk.ids_[v]) + " is in no face");
    }
  }

  // Connectivity through shared edges, orienting neighbours coherently on the way.
  std::vector<int> visited(nf, 0);
  std::deque<std::size_t> queue{0};
  visited[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const std::size_t f = queue.front();
    queue.pop_front();
    for (int k = 0; k < 3; ++k) {
      const int a = faces[f][k];
      const int b = faces[f][(k + 1) % 3];
      const int e = disk.edge_lookup_.at(edge_key(a, b));
      for (int g : edge_faces[static_cast<std::size_t>(e)]) {
        const auto gu = static_cast<std::size_t>(g);
        if (gu == f) continue;
        if (!visited[gu]) {
          // The neighbour must traverse b -> a.
          if (has_directed(faces[gu], a, b)) std::swap(faces[gu][1], faces[gu][2]);
          visited[gu] = 1;
          ++reached;
          queue.push_back(gu);
        } else if (has_directed(faces[gu], a, b)) {
          throw Error(ErrorCode::NonDisk, "non-orientable at " + face_str(gu));
        }
      }
    }
  }
  if (reached != nf) throw Error(ErrorCode::NonDisk, "faces are not edge-connected");

  // Each vertex star must be a single fan.
  for (std::size_t v = 0; v < nv; ++v) {
    const auto& star = vertex_faces[v];
    std::vector<int> mark(star.size(), 0);
    std::deque<std::size_t> q{0};
    mark[0] = 1;
    std::size_t count = 1;
    while (!q.empty()) {
      const std::size_t i = q.front();
      q.pop_front();
      for (std::size_t j = 0; j < star.size(); ++j) {
        if (mark[j]) continue;
        const auto& fi = faces[static_cast<std::size_t>(star[i])];
        const auto& fj = faces[static_cast<std::size_t>(star[j])];
        int shared = 0;
        for (int x : fi) {
          if (x != static_cast<int>(v) && std::find(fj.begin(), fj.end(), x) != fj.end()) ++shared;
        }
        if (shared > 0) {
          mark[j] = 1;
          ++count;
          q.push_back(j);
        }
      }
    }
    if (count != star.size()) {
      throw Error(ErrorCode::NonDisk, "pinched vertex " + std::to_string(disk.ids_[v]));
    }
  }

  // Boundary: edges in exactly one face, forming a single simple cycle.
  disk.boundary_edge_.assign(disk.edges_.size(), false);
  disk.boundary_vertex_.assign(nv, false);
  std::map<int, int> next;  // directed boundary successor
  std::size_t n_boundary = 0;
  for (std::size_t e = 0; e < disk.edges_.size(); ++e) {
    if (edge_faces[e].size() != 1) continue;
    disk.boundary_edge_[e] = true;
    ++n_boundary;
    const auto& t = faces[static_cast<std::size_t>(edge_faces[e][0])];
    int u = disk.edges_[e][0];
    int w = disk.edges_[e][1];
    if (!has_directed(t, u, w)) std::swap(u, w);
    if (!next.emplace(u, w).second) {
      throw Error(ErrorCode::NonDisk, "boundary is not a simple cycle at vertex " + std::to_string(disk.ids_[u]));
    }
    disk.boundary_vertex_[static_cast<std::size_t>(u)] = true;
    disk.boundary_vertex_[static_cast<std::size_t>(w)] = true;
  }
  if (n_boundary == 0) throw Error(ErrorCode::NonDisk, "no boundary");

  const int start = next.begin()->first;
  int cur = start;
  do {
    disk.boundary_cycle_.push_back(cur);
    auto it = next.find(cur);
    if (it == next.end()) throw Error(ErrorCode::NonDisk, "open boundary chain");
    cur = it->second;
  } while (cur != start && disk.boundary_cycle_.size() <= n_boundary);
  if (disk.boundary_cycle_.size() != n_boundary) {
    throw Error(ErrorCode::NonDisk, "multiple boundary cycles");
  }

  disk.faces_ = std::move(faces);
  if (disk.euler_characteristic() != 1) {
    throw Error(ErrorCode::EulerCharacteristic, "V - E + F = " + std::to_string(disk.euler_characteristic()));
  }
  return disk;
}

const char* to_string(SimplexClass c) {
  switch (c) {
    case SimplexClass::Interior: return "interior";
    case SimplexClass::Boundary: return "boundary";
    case SimplexClass::Augmented: return "augmented";
  }
  return "?";
}

int AugmentedDisk::edge_index(int a, int b) const {
  const int n = apex();
  if (a == n || b == n) {
    const int v = a == n ? b : a;
    if (v == n) return -1;
    const auto cycle = base_.boundary_cycle();
    auto it = std::find(cycle.begin(), cycle.end(), v);
    if (it == cycle.end()) return -1;
    return static_cast<int>(base_.num_edges()) + static_cast<int>(it - cycle.begin());
  }
  return base_.edge_index(a, b);
}

SimplexClass AugmentedDisk::vertex_class(int v) const {
  if (v == apex()) return SimplexClass::Augmented;
  return base_.is_boundary_vertex(v) ? SimplexClass::Boundary : SimplexClass::Interior;
}

AugmentedDisk augment(CombinatorialDisk disk) {
  AugmentedDisk aug;
  aug.base_ = std::move(disk);
  const auto& base = aug.base_;
  const int apex = aug.apex();

  VertexId max_id = base.ids().front();
  for (VertexId id : base.ids()) max_id = std::max(max_id, id);
  aug.apex_id_ = max_id + 1;

  for (std::size_t e = 0; e < base.num_edges(); ++e) {
    aug.edges_.push_back({base.edges()[e], base.is_boundary_edge(static_cast<int>(e)) ? SimplexClass::Boundary
                                                                                         : SimplexClass::Interior});
  }
  const auto cycle = base.boundary_cycle();
  for (int v : cycle) aug.edges_.push_back({{v, apex}, SimplexClass::Augmented});

  auto make_face = [&](std::array<int, 3> v, SimplexClass cls) {
    Face f{v, {}, cls};
    for (int k = 0; k < 3; ++k) f.e[k] = aug.edge_index(v[(k + 1) % 3], v[(k + 2) % 3]);
    return f;
  };
  for (const auto& t : base.faces()) aug.faces_.push_back(make_face(t, SimplexClass::Interior));
  const std::size_t nb = cycle.size();
  for (std::size_t k = 0; k < nb; ++k) {
    const int u = cycle[k];
    const int w = cycle[(k + 1) % nb];
    // The disk face traverses u -> w, so the coherent sphere orientation traverses w -> u.
    aug.faces_.push_back(make_face({w, u, apex}, SimplexClass::Augmented));
  }

  aug.vertex_faces_.assign(aug.num_vertices(), {});
  aug.vertex_edges_.assign(aug.num_vertices(), {});
  aug.edge_faces_.assign(aug.num_edges(), {-1, -1});
  for (std::size_t e = 0; e < aug.edges_.size(); ++e) {
    for (int v : aug.edges_[e].v) aug.vertex_edges_[static_cast<std::size_t>(v)].push_back(static_cast<int>(e));
  }
  for (std::size_t f = 0; f < aug.faces_.size(); ++f) {
    for (int k = 0; k < 3; ++k) {
      aug.vertex_faces_[static_cast<std::size_t>(aug.faces_[f].v[k])].push_back(static_cast<int>(f));
      auto& ef = aug.edge_faces_[static_cast<std::size_t>(aug.faces_[f].e[k])];
      (ef[0] < 0 ? ef[0] : ef[1]) = static_cast<int>(f);
    }
  }
  return aug;
}

SimplexClassification classify(const AugmentedDisk& aug) {
  SimplexClassification c;
  for (std::size_t v = 0; v < aug.num_vertices(); ++v) c.vertices.push_back(aug.vertex_class(static_cast<int>(v)));
  for (const auto& e : aug.edges()) c.edges.push_back(e.cls);
  for (const auto& f : aug.faces()) c.faces.push_back(f.cls);
  return c;
}

MultiplicityAssignment standard_multiplicities(const AugmentedDisk& aug) {
  auto vertex_mu = [](SimplexClass c) {
    return c == SimplexClass::Interior ? 1 : c == SimplexClass::Boundary ? 0 : -1;
  };
  auto edge_mu = [](SimplexClass c) {
    return c == SimplexClass::Interior ? -1 : c == SimplexClass::Boundary ? 0 : 1;
  };
  auto face_mu = [](SimplexClass c) { return c == SimplexClass::Augmented ? -1 : 1; };

  const auto cls = classify(aug);
  MultiplicityAssignment mu;
  for (auto c : cls.vertices) mu.vertices.push_back(vertex_mu(c));
  for (auto c : cls.edges) mu.edges.push_back(edge_mu(c));
  for (auto c : cls.faces) mu.faces.push_back(face_mu(c));
  return mu;
}

void require_complete(const AugmentedDisk& aug, const MultiplicityAssignment& mu) {
  if (mu.vertices.size() != aug.num_vertices() || mu.edges.size() != aug.num_edges() ||
      mu.faces.size() != aug.num_faces()) {
    throw Error(ErrorCode::MissingMultiplicity, "multiplicity does not cover every simplex");
  }
}

int pointwise_multiplicity(const AugmentedDisk& aug, const MultiplicityAssignment& mu, SimplexRef x) {
  require_complete(aug, mu);
  const auto idx = static_cast<std::size_t>(x.index);
  switch (x.dim) {
    case SimplexDim::Vertex: {
      int total = mu.vertices.at(idx);
      for (int e : aug.vertex_edges(x.index)) total += mu.edges[static_cast<std::size_t>(e)];
      for (int f : aug.vertex_faces(x.index)) total += mu.faces[static_cast<std::size_t>(f)];
      return total;
    }
    case SimplexDim::Edge: {
      int total = mu.edges.at(idx);
      for (int f : aug.edge_faces(x.index)) total += mu.faces[static_cast<std::size_t>(f)];
      return total;
    }
    case SimplexDim::Face:
      return mu.faces.at(idx);
  }
  return 0;
}

}  // namespace duniform
