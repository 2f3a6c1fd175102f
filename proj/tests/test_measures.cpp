#include <gtest/gtest.h>

#include "support.hpp"

using namespace dtest;

namespace {

std::vector<int> faces_at(const AugmentedDisk& aug, int v) {
  const auto s = aug.vertex_faces(v);
  return {s.begin(), s.end()};
}

}  // namespace

TEST(Measure, AgreesWithDirectCurvature) {
  std::mt19937_64 rng(7);
  const Problem p = load_preset("ring_lattice", {2, std::nullopt});
  for (int i = 0; i < 100; ++i) {
    const Sample s = random_admissible(rng, p.aug);
    const double maxK = curvature(p.aug, s.cs, s.f).cwiseAbs().maxCoeff();
    EXPECT_LE(measure_equivalence_check(p.aug, s.cs, s.f), 1e-12 * (1 + maxK));
  }
}

TEST(Measure, ZeroAtHexagonSolution) {
  const Problem p = load_preset("hex_tangent");
  EXPECT_LE(measure_equivalence_check(p.aug, p.cs, hex_exact_label(p)), 1e-14);
}

TEST(Measure, SingleTriangle) {
  const Problem p = load_preset("triangle");
  Label f = Label::Zero(4);
  f[3] = 1.3;
  EXPECT_LE(measure_equivalence_check(p.aug, p.cs, f), 1e-12);
}

TEST(Measure, FlowerIsTwoPiMinusAngleSum) {
  std::mt19937_64 rng(9);
  const Problem p = load_preset("hex_tangent");
  const Sample s = random_admissible(rng, p.aug);
  const int center = p.aug.index_of(0);
  const auto ms = make_multiplicity_surface(p.aug, standard_multiplicities(p.aug), compute_metric(p.aug, s.cs, s.f));
  double angle_sum = 0.0;
  for (int face : p.aug.vertex_faces(center)) {
    const auto& F = p.aug.faces()[static_cast<std::size_t>(face)];
    angle_sum += ms.metric.angles[static_cast<std::size_t>(face)][static_cast<std::size_t>(F.corner(center))];
  }
  const auto star = face_closure(p.aug, faces_at(p.aug, center));
  EXPECT_NEAR(measure_curvature(ms, center, star), 2 * kPi - angle_sum, 1e-13);
  EXPECT_NEAR(measure_curvature(ms, center), 2 * kPi - angle_sum, 1e-13);
}

TEST(Measure, PerSimplexContributions) {
  // With unit multiplicity: vertex 2 pi, edge -pi, face pi - theta.
  std::mt19937_64 rng(10);
  const Problem p = load_preset("hex_tangent");
  const Sample s = random_admissible(rng, p.aug);
  const int center = p.aug.index_of(0);
  const auto ms = make_multiplicity_surface(p.aug, standard_multiplicities(p.aug), compute_metric(p.aug, s.cs, s.f));
  const int face = p.aug.vertex_faces(center)[0];
  const auto& F = p.aug.faces()[static_cast<std::size_t>(face)];
  const double theta = ms.metric.angles[static_cast<std::size_t>(face)][static_cast<std::size_t>(F.corner(center))];
  SubComplex only_face{{}, {}, {face}};
  SubComplex only_vertex{{center}, {}, {}};
  SubComplex only_edge{{}, {F.e[(F.corner(center) + 1) % 3]}, {}};
  EXPECT_NEAR(measure_curvature(ms, center, only_vertex), 2 * kPi, 1e-15);
  EXPECT_NEAR(measure_curvature(ms, center, only_edge), -kPi, 1e-15);
  EXPECT_NEAR(measure_curvature(ms, center, only_face), kPi - theta, 1e-15);
}

TEST(Measure, ValuationOnAdjacentTriangles) {
  std::mt19937_64 rng(12);
  const Problem p = load_preset("hex_tangent");
  const Sample s = random_admissible(rng, p.aug);
  const int center = p.aug.index_of(0);
  const auto ms = make_multiplicity_surface(p.aug, standard_multiplicities(p.aug), compute_metric(p.aug, s.cs, s.f));
  const auto faces = faces_at(p.aug, center);
  // Every two-set partition of the flower.
  for (unsigned mask = 1; mask + 1 < (1u << faces.size()); ++mask) {
    std::vector<int> fa, fb;
    for (std::size_t k = 0; k < faces.size(); ++k) ((mask >> k) & 1u ? fa : fb).push_back(faces[k]);
    const auto a = face_closure(p.aug, fa);
    const auto b = face_closure(p.aug, fb);
    const ValuationReport r = valuation_check(ms, center, a, b);
    EXPECT_TRUE(r.holds) << r.defect;
    EXPECT_NEAR(r.union_value, measure_curvature(ms, center), 1e-12);
  }
}

TEST(Measure, SubcomplexOperations) {
  const Problem p = load_preset("hex_tangent");
  const auto whole = whole_complex(p.aug);
  EXPECT_EQ(whole.vertices.size(), 8u);
  EXPECT_EQ(whole.faces.size(), 12u);
  const auto disk = disk_part(p.aug);
  EXPECT_EQ(disk.vertices.size(), 7u);
  EXPECT_EQ(disk.edges.size(), 12u);
  EXPECT_EQ(intersect(whole, disk), disk);
  EXPECT_EQ(unite(whole, disk), whole);
  EXPECT_NO_THROW(require_subcomplex(p.aug, disk));
  SubComplex open_face{{}, {}, {0}};
  EXPECT_THROW(require_subcomplex(p.aug, open_face), Error);
}

TEST(Measure, FoldedSheetsCancel) {
  const Problem p = load_preset("hex_tangent");
  const Label f = hex_exact_label(p);
  const PlaneLayout layout = layout_augmented(p.aug, p.cs, f);
  const auto mu = standard_multiplicities(p.aug);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-4, 4);
  for (int i = 0; i < 200; ++i) {
    const Vec2 q(u(rng), u(rng));
    EXPECT_EQ(covered_multiplicity(p.aug, mu, layout.positions, q), 0);
  }
  EXPECT_EQ(covered_multiplicity(p.aug, mu, layout.positions, layout.positions[0]), 0);
}
