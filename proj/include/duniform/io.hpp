#pragma once

// Problem files, presets, JSON reports and SVG rendering.
//
// Problem schema (UTF-8 JSON):
//   vertices : [id, ...]                 non-negative integers
//   faces    : [[i, j, k], ...]
//   alpha    : {"id": number, ..., "hat": number}
//   eta      : {"i-j": number, ...}      one per disk edge, smaller id first
//   mu       : {"id": number, ...}       one per boundary vertex; becomes eta(hat, id)
//   f_init   : {"id": number, "hat": number}   optional, partial allowed
//   scenario : "tangent" | "orthogonal" | "inscribed"   optional

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "duniform/conformal.hpp"
#include "duniform/layout.hpp"
#include "duniform/rigidity.hpp"
#include "duniform/solver.hpp"

namespace duniform {

using json = nlohmann::json;

struct Problem {
  AugmentedDisk aug;
  ConformalStructure cs;
  Label f;  // f_init merged over the default initial label
  std::optional<Scenario> scenario;
};

/// Throws Error(Schema) with a JSON pointer in the message, or the validation errors of the disk.
Problem parse_problem(const json& doc);
Problem load_problem(const std::filesystem::path& path);

/// Canonical form: oriented faces, every alpha/eta/mu entry, and f_init when include_label is set.
json serialize_problem(const Problem& p, bool include_label = true);

/// Keyed by vertex id, "hat" for the apex.
json label_to_json(const AugmentedDisk& aug, const Eigen::VectorXd& values);

struct PresetParams {
  int rings = 2;
  std::optional<Scenario> scenario;
};

/// hex_tangent, hex_orthogonal, hex_inscribed, ring_lattice, triangle. Throws UnknownPreset.
json preset(std::string_view name, const PresetParams& params = {});

/// Hexagonal-lattice disk of all points within `rings` lattice steps of the origin.
RawMesh ring_lattice_mesh(int rings);

json layout_to_json(const AugmentedDisk& aug, const PlaneLayout& layout, const std::vector<MPoint>& mpoints);
json boundary_report_to_json(const AugmentedDisk& aug, const BoundaryReport& r);
json newton_to_json(const NewtonResult& r);
json rank_to_json(const Eigen::MatrixXd& m, const RankReport& r);

struct SvgOptions {
  double margin = 0.05;  // fraction of the drawing extent
  double width = 800.0;  // pixels
};

/// Disk faces, apex faces, edges (apex edges dashed), circles of radius sqrt(alpha) e^f
/// (dots where alpha = 0) and the highlighted apex circle. Throws EmptyLayout.
std::string render_svg(const AugmentedDisk& aug, const PlaneLayout& layout, const ConformalStructure& cs,
                       const Label& f, const SvgOptions& opts = {});

}  // namespace duniform
