#pragma once

// Combinatorial closed disks and their augmentation by an apex vertex joined to
// every boundary vertex. The augmented complex is a combinatorial sphere.

#include <array>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "duniform/error.hpp"

namespace duniform {

using VertexId = std::int64_t;

/// Raw, unvalidated input: opaque vertex ids and faces as id triples.
struct RawMesh {
  std::vector<VertexId> vertices;
  std::vector<std::array<VertexId, 3>> faces;
};

class CombinatorialDisk {
 public:
  std::size_t num_vertices() const noexcept { return ids_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  std::size_t num_faces() const noexcept { return faces_.size(); }

  std::span<const VertexId> ids() const noexcept { return ids_; }
  VertexId id(int v) const { return ids_.at(static_cast<std::size_t>(v)); }
  /// Throws UnknownVertex.
  int index_of(VertexId id) const;

  /// Faces as vertex-index triples, coherently oriented (same orientation as the first input face).
  std::span<const std::array<int, 3>> faces() const noexcept { return faces_; }
  /// Edges as sorted vertex-index pairs.
  std::span<const std::array<int, 2>> edges() const noexcept { return edges_; }
  /// Index of edge {a, b}, or -1.
  int edge_index(int a, int b) const;

  bool is_boundary_vertex(int v) const { return boundary_vertex_.at(static_cast<std::size_t>(v)); }
  bool is_boundary_edge(int e) const { return boundary_edge_.at(static_cast<std::size_t>(e)); }

  /// Boundary vertices in cycle order; consecutive entries (u, w) appear as the directed
  /// edge u -> w in the oriented face that contains them.
  std::span<const int> boundary_cycle() const noexcept { return boundary_cycle_; }

  std::size_t num_interior_vertices() const noexcept { return ids_.size() - boundary_cycle_.size(); }
  int euler_characteristic() const noexcept {
    return static_cast<int>(num_vertices()) - static_cast<int>(num_edges()) + static_cast<int>(num_faces());
  }

 private:
  friend CombinatorialDisk validate_disk(const RawMesh& mesh);

  std::vector<VertexId> ids_;
  std::unordered_map<VertexId, int> index_;
  std::vector<std::array<int, 3>> faces_;
  std::vector<std::array<int, 2>> edges_;
  std::unordered_map<std::uint64_t, int> edge_lookup_;
  std::vector<bool> boundary_vertex_;
  std::vector<bool> boundary_edge_;
  std::vector<int> boundary_cycle_;
};

/// Checks the closed-disk conditions and orients the faces coherently.
/// Throws ImproperTriangulation, UnknownVertex, NonManifoldEdge, NonDisk or EulerCharacteristic.
CombinatorialDisk validate_disk(const RawMesh& mesh);

enum class SimplexClass { Interior, Boundary, Augmented };

const char* to_string(SimplexClass c);

struct Edge {
  std::array<int, 2> v;
  SimplexClass cls;
};

struct Face {
  std::array<int, 3> v;
  /// e[k] is the edge opposite v[k].
  std::array<int, 3> e;
  SimplexClass cls;

  /// Orientation in a flat layout: +1 for faces of the disk, -1 for the folded sheet.
  int sign() const noexcept { return cls == SimplexClass::Augmented ? -1 : 1; }
  /// Position of vertex v in this face, or -1.
  int corner(int v) const noexcept {
    for (int k = 0; k < 3; ++k) if (this->v[k] == v) return k;
    return -1;
  }
};

class AugmentedDisk {
 public:
  const CombinatorialDisk& base() const noexcept { return base_; }

  /// Vertex indices 0..n-1 are the disk's; the apex is n.
  int apex() const noexcept { return static_cast<int>(base_.num_vertices()); }
  VertexId apex_id() const noexcept { return apex_id_; }
  VertexId id(int v) const { return v == apex() ? apex_id_ : base_.id(v); }
  int index_of(VertexId id) const { return id == apex_id_ ? apex() : base_.index_of(id); }

  std::size_t num_vertices() const noexcept { return base_.num_vertices() + 1; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  std::size_t num_faces() const noexcept { return faces_.size(); }

  /// Edges of the disk first (same indices as in the base), then apex edges in boundary-cycle order.
  std::span<const Edge> edges() const noexcept { return edges_; }
  /// Faces of the disk first, then one apex face per boundary edge in boundary-cycle order.
  std::span<const Face> faces() const noexcept { return faces_; }
  int edge_index(int a, int b) const;

  SimplexClass vertex_class(int v) const;

  std::span<const int> vertex_faces(int v) const { return vertex_faces_.at(static_cast<std::size_t>(v)); }
  std::span<const int> vertex_edges(int v) const { return vertex_edges_.at(static_cast<std::size_t>(v)); }
  /// Faces incident to edge e (always two: the augmented disk is a closed surface).
  std::array<int, 2> edge_faces(int e) const { return edge_faces_.at(static_cast<std::size_t>(e)); }

  std::size_t num_disk_faces() const noexcept { return base_.num_faces(); }
  std::size_t num_disk_edges() const noexcept { return base_.num_edges(); }

 private:
  friend AugmentedDisk augment(CombinatorialDisk disk);

  CombinatorialDisk base_;
  VertexId apex_id_ = 0;
  std::vector<Edge> edges_;
  std::vector<Face> faces_;
  std::vector<std::vector<int>> vertex_faces_;
  std::vector<std::vector<int>> vertex_edges_;
  std::vector<std::array<int, 2>> edge_faces_;
};

/// Adds the apex (id max+1), one edge per boundary vertex and one face per boundary edge.
AugmentedDisk augment(CombinatorialDisk disk);

struct SimplexClassification {
  std::vector<SimplexClass> vertices;
  std::vector<SimplexClass> edges;
  std::vector<SimplexClass> faces;
};

SimplexClassification classify(const AugmentedDisk& aug);

/// Integer multiplicity per simplex.
struct MultiplicityAssignment {
  std::vector<int> vertices;
  std::vector<int> edges;
  std::vector<int> faces;
};

/// interior/boundary/augmented: vertex 1/0/-1, edge -1/0/1, face 1/-/-1.
MultiplicityAssignment standard_multiplicities(const AugmentedDisk& aug);

enum class SimplexDim { Vertex = 0, Edge = 1, Face = 2 };

struct SimplexRef {
  SimplexDim dim;
  int index;
};

/// Sum of mu over the closed star of x (every simplex having x as a face, x included).
/// Throws MissingMultiplicity if mu does not cover the complex.
int pointwise_multiplicity(const AugmentedDisk& aug, const MultiplicityAssignment& mu, SimplexRef x);

/// Throws MissingMultiplicity unless mu has one entry per simplex of aug.
void require_complete(const AugmentedDisk& aug, const MultiplicityAssignment& mu);

}  // namespace duniform
