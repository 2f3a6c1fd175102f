#pragma once

// Curvature of polyhedral surfaces with integer simplex multiplicities:
//   K_v = 2 pi mu(v) + sum_{e > v} pi mu(e) + sum_{f > v} (pi - theta_{v<f}) mu(f).

#include <span>
#include <vector>

#include <Eigen/Core>

#include "duniform/complex.hpp"
#include "duniform/conformal.hpp"
#include "duniform/minkowski.hpp"

namespace duniform {

/// A simplicial sub-complex of an augmented disk, as sorted index sets.
struct SubComplex {
  std::vector<int> vertices;
  std::vector<int> edges;
  std::vector<int> faces;

  bool operator==(const SubComplex&) const = default;
};

SubComplex whole_complex(const AugmentedDisk& aug);
/// The disk without the apex and its simplices.
SubComplex disk_part(const AugmentedDisk& aug);
/// Closure of a set of faces.
SubComplex face_closure(const AugmentedDisk& aug, std::span<const int> faces);

SubComplex unite(const SubComplex& a, const SubComplex& b);
SubComplex intersect(const SubComplex& a, const SubComplex& b);

/// Throws NotSubcomplex if indices are out of range or x is not closed under taking faces.
void require_subcomplex(const AugmentedDisk& aug, const SubComplex& x);

struct MultiplicitySurface {
  const AugmentedDisk* complex = nullptr;
  MultiplicityAssignment mu;
  MetricData metric;
};

MultiplicitySurface make_multiplicity_surface(const AugmentedDisk& aug, MultiplicityAssignment mu, MetricData metric);

/// Curvature at v, summing the contributions of the simplices of `part` that contain v.
double measure_curvature(const MultiplicitySurface& ms, int v, const SubComplex& part);
double measure_curvature(const MultiplicitySurface& ms, int v);

/// Max over vertices of |measure curvature (standard multiplicities) - curvature|.
double measure_equivalence_check(const AugmentedDisk& aug, const ConformalStructure& cs, const Label& f);

struct ValuationReport {
  double union_value = 0.0;
  double a_value = 0.0;
  double b_value = 0.0;
  double intersection_value = 0.0;
  double defect = 0.0;  // |K(A u B) - K(A) - K(B) + K(A n B)|
  bool holds = false;
};

/// Valuation property of the curvature measure at vertex v, to 1e-12.
ValuationReport valuation_check(const MultiplicitySurface& ms, int v, const SubComplex& a, const SubComplex& b);

/// Sum of mu over the simplices whose laid-out closed image contains q. With the standard
/// multiplicities and a flat layout, both sheets cover the disk and the total vanishes.
int covered_multiplicity(const AugmentedDisk& aug, const MultiplicityAssignment& mu, std::span<const Vec2> positions,
                         const Vec2& q, double tol = 1e-9);

}  // namespace duniform
