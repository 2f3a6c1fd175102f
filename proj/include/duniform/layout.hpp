#pragma once

// Development of flat labels into the plane by successive face placement, and the
// M-weighted points realizing the developed configuration.

#include <string_view>
#include <vector>

#include "duniform/conformal.hpp"
#include "duniform/minkowski.hpp"

namespace duniform {

enum class Traversal { BreadthFirst, DepthFirst };

struct LayoutOptions {
  Traversal traversal = Traversal::BreadthFirst;
  /// Curvatures with |K| above this are reported as not flat.
  double flat_tol = 1e-8;
};

struct PlaneLayout {
  /// One position per vertex of the augmented disk for augmented layouts; one per disk vertex otherwise.
  std::vector<Vec2> positions;
  /// Max distance between independent placements of the same vertex, divided by the layout diameter.
  double consistency_residual = 0.0;
  /// Max over laid-out edges of | |P_v - P_w| - l_vw | / l_vw.
  double max_edge_error = 0.0;
  /// Bounding-box diagonal of the positions.
  double diameter = 0.0;
  bool augmented = false;
};

/// Lays out the disk faces. The first face is placed with its first vertex at the origin,
/// its second on the positive x-axis and its third in the upper half plane.
/// Throws NotFlat if an interior curvature exceeds flat_tol, or the metric errors.
PlaneLayout layout_disk(const AugmentedDisk& aug, const ConformalStructure& cs, const Label& f,
                        const LayoutOptions& opts = {});

/// Lays out the whole augmented disk: apex at the origin, the fan of apex faces first, then the
/// disk faces folded back over it. Apex faces come out clockwise, disk faces counterclockwise.
/// Throws FanNotClosed if |K(apex)| exceeds flat_tol, NotFlat for any other vertex.
PlaneLayout layout_augmented(const AugmentedDisk& aug, const ConformalStructure& cs, const Label& f,
                             const LayoutOptions& opts = {});

/// xi_v = e^{-f_v} (p_v, (|p_v|^2 - alpha_v e^{2 f_v} - 1)/2, (|p_v|^2 - alpha_v e^{2 f_v} + 1)/2).
/// Then xi_v * xi_v = alpha_v, -xi_v * xi_w = eta_vw on edges and f_v = -log(xi_v^4 - xi_v^3).
std::vector<MPoint> realize_mpoints(const PlaneLayout& layout, const ConformalStructure& cs, const Label& f);

/// Max relative residuals of xi*xi = alpha (vertices) and -xi*xi' = eta (edges), relative to max(1, |target|).
struct RealizationResidual {
  double vertex = 0.0;
  double edge = 0.0;
};

RealizationResidual realization_residual(const AugmentedDisk& aug, const ConformalStructure& cs,
                                         const std::vector<MPoint>& xi);

struct NormalizedConfiguration {
  PlaneLayout layout;
  std::vector<MPoint> mpoints;
  Label f;
};

/// Moves the apex circle to the unit circle by a translation and a dilation, both applied as
/// Lorentz maps to the M-weighted points. Requires an augmented layout.
NormalizedConfiguration normalize_to_unit_disk(const AugmentedDisk& aug, const PlaneLayout& layout,
                                               const std::vector<MPoint>& mpoints);

enum class Scenario { Tangent, Orthogonal, Inscribed };

/// "tangent", "orthogonal" or "inscribed"; throws UnknownScenario.
Scenario parse_scenario(std::string_view name);
std::string_view to_string(Scenario s);

struct BoundaryReport {
  Scenario scenario = Scenario::Tangent;
  std::vector<int> vertices;       // boundary vertices in cycle order
  std::vector<double> residuals;   // per boundary vertex
  double max_residual = 0.0;
  bool passed = false;             // max_residual <= 1e-9
};

/// Boundary predicate against the unit circle, per boundary vertex:
/// tangent | |c| + r - 1 |, orthogonal | |c|^2 - 1 - r^2 |, inscribed | |p| - 1 |.
BoundaryReport verify_boundary_condition(const AugmentedDisk& aug, const std::vector<MPoint>& mpoints,
                                         Scenario scenario);

/// Signed doubled area of the laid-out face (positive counterclockwise).
double orientation(const PlaneLayout& layout, const Face& face);

}  // namespace duniform
