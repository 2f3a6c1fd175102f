#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "duniform/io.hpp"
#include "duniform/measures.hpp"

namespace dtest {

using namespace duniform;

inline constexpr double kPi = std::numbers::pi;

inline Problem load_preset(const std::string& name, PresetParams params = {}) {
  return parse_problem(preset(name, params));
}

/// Closed-form flat labels of the symmetric hexagons: f = 0 on the disk.
inline Label hex_exact_label(const Problem& p) {
  Label f = Label::Zero(static_cast<Eigen::Index>(p.aug.num_vertices()));
  switch (*p.scenario) {
    case Scenario::Tangent: f[p.aug.apex()] = std::log(3.0); break;
    case Scenario::Orthogonal: f[p.aug.apex()] = 0.5 * std::log(3.0); break;
    case Scenario::Inscribed: f[p.aug.apex()] = 0.0; break;
  }
  return f;
}

/// Newton from f = 0 on the disk and log 2.8 at the apex.
inline NewtonResult solve_hex(const Problem& p) {
  Label f0 = Label::Zero(static_cast<Eigen::Index>(p.aug.num_vertices()));
  f0[p.aug.apex()] = std::log(2.8);
  return newton_flat(p.aug, p.cs, f0);
}

struct Sample {
  ConformalStructure cs;
  Label f;
};

/// Random structure and label on aug, rejected until admissible.
inline Sample random_admissible(std::mt19937_64& rng, const AugmentedDisk& aug) {
  std::uniform_real_distribution<double> alpha(0.5, 1.5);
  std::uniform_real_distribution<double> eta(0.6, 1.4);
  std::uniform_real_distribution<double> mu(-1.0, 0.3);
  std::uniform_real_distribution<double> f(-0.3, 0.3);
  std::uniform_real_distribution<double> hat(0.5, 2.0);
  const auto& base = aug.base();
  const std::size_t n = base.num_vertices();
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<double> a(n), e(base.num_edges()), m(n, 0.0);
    for (auto& x : a) x = alpha(rng);
    for (auto& x : e) x = eta(rng);
    for (int v : base.boundary_cycle()) m[static_cast<std::size_t>(v)] = mu(rng);
    Sample s{augmented_structure(aug, a, e, m, 1.0), Label(static_cast<Eigen::Index>(n + 1))};
    for (std::size_t v = 0; v < n; ++v) s.f[static_cast<Eigen::Index>(v)] = f(rng);
    s.f[aug.apex()] = std::log(3.0) + hat(rng);
    if (admissible(aug, s.cs, s.f).ok) return s;
  }
  throw std::runtime_error("no admissible sample");
}

inline Vec4 random_vec4(std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> n(0.0, scale);
  return Vec4(n(rng), n(rng), n(rng), n(rng));
}

/// A random element of the Lorentz group built from the six Mobius generators.
inline LorentzMap random_lorentz(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-0.7, 0.7);
  InfinitesimalMobius g{u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
  return exp_generator(g, 1.0);
}

/// Lift of a circle with center c and radius r, scaled by s.
inline MPoint circle(double cx, double cy, double r, double s = 1.0) {
  return MPoint(s * canonical_lift({Vec2(cx, cy), r * r}).xi());
}

}  // namespace dtest
