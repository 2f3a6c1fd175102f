// Acceptance checks. One line per criterion; exit code 1 if any asserted criterion fails.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include "support.hpp"

using namespace dtest;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int id, bool pass, const std::string& name, const std::string& detail) {
  std::printf("[%s] %2d %s: %s\n", pass ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  if (!pass) ++failures;
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

struct Solved {
  std::string name;
  Problem problem;
  NewtonResult result;
  double seconds;
};

Solved solve_preset(const std::string& name) {
  Problem p = load_preset(name);
  const auto t0 = Clock::now();
  NewtonResult r = solve_hex(p);
  const double s = seconds_since(t0);
  return {name, std::move(p), std::move(r), s};
}

/// Max over boundary vertices of |(f_apex - f_v) - expected|.
double gap_error(const Solved& s, double expected) {
  const auto& aug = s.problem.aug;
  double worst = 0.0;
  for (int v : aug.base().boundary_cycle()) {
    worst = std::max(worst, std::abs(s.result.f[aug.apex()] - s.result.f[v] - expected));
  }
  return worst;
}

BoundaryReport normalized_boundary(const Solved& s, Scenario scenario) {
  const auto& p = s.problem;
  const PlaneLayout l = layout_augmented(p.aug, p.cs, s.result.f);
  const auto n = normalize_to_unit_disk(p.aug, l, realize_mpoints(l, p.cs, s.result.f));
  return verify_boundary_condition(p.aug, n.mpoints, scenario);
}

std::string newton_detail(const Solved& s) {
  return "|K|=" + fmt("%.2e", s.result.residual) + " iter=" + std::to_string(s.result.iterations) +
         " t=" + fmt("%.3fs", s.seconds);
}

}  // namespace

int main() {
  const Solved tangent = solve_preset("hex_tangent");
  const Solved orthogonal = solve_preset("hex_orthogonal");
  const Solved inscribed = solve_preset("hex_inscribed");
  const Solved* all[] = {&tangent, &orthogonal, &inscribed};

  // 1
  {
    const auto& r = tangent.result;
    const double gap = gap_error(tangent, std::log(3.0));
    const BoundaryReport b = normalized_boundary(tangent, Scenario::Tangent);
    const bool pass = r.converged && r.residual <= 1e-10 && r.iterations <= 25 && tangent.seconds < 1.0 &&
                      gap <= 1e-8 && b.max_residual <= 1e-9;
    report(1, pass, "hexagonal tangency",
           newton_detail(tangent) + " gap_err=" + fmt("%.2e", gap) + " tangency=" + fmt("%.2e", b.max_residual));
  }

  // 2
  {
    const auto& r = orthogonal.result;
    const double gap = gap_error(orthogonal, 0.5 * std::log(3.0));
    const BoundaryReport b = normalized_boundary(orthogonal, Scenario::Orthogonal);
    const bool pass = r.converged && r.residual <= 1e-10 && gap <= 1e-8 && b.max_residual <= 1e-9;
    report(2, pass, "hexagonal orthogonal",
           newton_detail(orthogonal) + " gap_err=" + fmt("%.2e", gap) + " orthogonality=" + fmt("%.2e", b.max_residual));
  }

  // 3
  {
    const auto& r = inscribed.result;
    const BoundaryReport b = normalized_boundary(inscribed, Scenario::Inscribed);
    const bool pass = r.converged && r.residual <= 1e-10 && b.max_residual <= 1e-9;
    report(3, pass, "hexagonal inscribed", newton_detail(inscribed) + " |p|-1=" + fmt("%.2e", b.max_residual));
  }

  // 4, 5
  {
    std::mt19937_64 rng(20240601);
    const Problem lattice = load_preset("ring_lattice", {2, std::nullopt});
    double worst_sum = 0.0;
    double worst_ratio = 0.0;
    for (int i = 0; i < 500; ++i) {
      const Sample s = random_admissible(rng, lattice.aug);
      const CurvatureVector K = curvature(lattice.aug, s.cs, s.f);
      worst_sum = std::max(worst_sum, std::abs(K.sum()));
      const double dev = measure_equivalence_check(lattice.aug, s.cs, s.f);
      worst_ratio = std::max(worst_ratio, dev / (1.0 + K.cwiseAbs().maxCoeff()));
    }
    report(4, worst_sum <= 1e-10, "Gauss-Bonnet", "500 samples, max |sum K|=" + fmt("%.2e", worst_sum));
    report(5, worst_ratio <= 1e-12, "measure equivalence",
           "500 samples, max dev/(1+max|K|)=" + fmt("%.2e", worst_ratio));
  }

  // 6
  {
    std::mt19937_64 rng(6);
    const Problem lattice = load_preset("ring_lattice", {2, std::nullopt});
    const double h = 1e-6;
    double worst_rel = 0.0;
    double worst_null = 0.0;
    for (int i = 0; i < 50; ++i) {
      const Sample s = random_admissible(rng, lattice.aug);
      const Eigen::MatrixXd J = curvature_jacobian(lattice.aug, s.cs, s.f);
      Eigen::MatrixXd F(J.rows(), J.cols());
      for (Eigen::Index w = 0; w < J.cols(); ++w) {
        Label fp = s.f, fm = s.f;
        fp[w] += h;
        fm[w] -= h;
        F.col(w) = (curvature(lattice.aug, s.cs, fp) - curvature(lattice.aug, s.cs, fm)) / (2 * h);
      }
      worst_rel = std::max(worst_rel, (J - F).cwiseAbs().maxCoeff() / J.cwiseAbs().maxCoeff());
      worst_null = std::max(worst_null, (J * Eigen::VectorXd::Ones(J.cols())).cwiseAbs().maxCoeff());
    }
    report(6, worst_rel <= 1e-6 && worst_null <= 1e-12, "Jacobian",
           "50 labels, rel FD err=" + fmt("%.2e", worst_rel) + " |J1|=" + fmt("%.2e", worst_null));
  }

  // 7
  {
    double worst = 0.0;
    for (const Solved* s : all) {
      const auto& p = s->problem;
      const Eigen::MatrixXd J = curvature_jacobian(p.aug, p.cs, s->result.f);
      const PlaneLayout l = layout_augmented(p.aug, p.cs, s->result.f);
      Eigen::VectorXd x(J.cols()), y(J.cols());
      for (Eigen::Index v = 0; v < x.size(); ++v) {
        x[v] = l.positions[static_cast<std::size_t>(v)].x();
        y[v] = l.positions[static_cast<std::size_t>(v)].y();
      }
      const double norm = J.cwiseAbs().rowwise().sum().maxCoeff();
      worst = std::max(worst, std::max((J * x).cwiseAbs().maxCoeff(), (J * y).cwiseAbs().maxCoeff()) / norm);
    }
    report(7, worst <= 1e-8, "Mobius kernel", "max |Jx|,|Jy| / |J| =" + fmt("%.2e", worst));
  }

  // 8
  {
    bool pass = true;
    double worst_k = 0.0;
    double worst_v = 0.0;
    for (const Solved* s : all) {
      for (int k = 0; k < 6; ++k) {
        InfinitesimalMobius g{};
        double* fields[] = {&g.a, &g.b, &g.c, &g.d, &g.t, &g.r};
        *fields[k] = 1.0;
        for (double eps : {1e-3, 1e-4}) {
          const OrbitReport r = mobius_orbit_check(s->problem.aug, s->problem.cs, s->result.f, g, eps);
          pass = pass && r.max_curvature <= 100 * eps * eps && r.max_variation_error <= 10 * eps;
          worst_k = std::max(worst_k, r.max_curvature / (eps * eps));
          worst_v = std::max(worst_v, r.max_variation_error / eps);
        }
      }
    }
    report(8, pass, "Mobius flatness invariance",
           "max |K|/eps^2=" + fmt("%.2f", worst_k) + " max var_err/eps=" + fmt("%.2f", worst_v));
  }

  // 9, 10
  {
    double worst_congruence = 0.0;
    double worst_edge = 0.0;
    double worst_vertex_fit = 0.0;
    double worst_edge_fit = 0.0;
    for (const Solved* s : all) {
      const auto& p = s->problem;
      const PlaneLayout bfs = layout_augmented(p.aug, p.cs, s->result.f, {Traversal::BreadthFirst});
      const PlaneLayout dfs = layout_augmented(p.aug, p.cs, s->result.f, {Traversal::DepthFirst});
      double mismatch = 0.0;
      for (std::size_t i = 0; i < bfs.positions.size(); ++i) {
        for (std::size_t j = i + 1; j < bfs.positions.size(); ++j) {
          mismatch = std::max(mismatch, std::abs((bfs.positions[i] - bfs.positions[j]).norm() -
                                                 (dfs.positions[i] - dfs.positions[j]).norm()));
        }
      }
      worst_congruence = std::max(worst_congruence, mismatch / bfs.diameter);
      worst_edge = std::max({worst_edge, bfs.max_edge_error, dfs.max_edge_error});
      const RealizationResidual rr = realization_residual(p.aug, p.cs, realize_mpoints(bfs, p.cs, s->result.f));
      worst_vertex_fit = std::max(worst_vertex_fit, rr.vertex);
      worst_edge_fit = std::max(worst_edge_fit, rr.edge);
    }
    report(9, worst_congruence <= 1e-9 && worst_edge <= 1e-9, "layout chain independence",
           "BFS/DFS mismatch/diam=" + fmt("%.2e", worst_congruence) + " edge err=" + fmt("%.2e", worst_edge));
    report(10, worst_vertex_fit <= 1e-10 && worst_edge_fit <= 1e-10, "realization",
           "xi*xi=alpha " + fmt("%.2e", worst_vertex_fit) + ", -xi*xi'=eta " + fmt("%.2e", worst_edge_fit));
  }

  // 11 (reported, not asserted)
  {
    const auto& p = tangent.problem;
    const PlaneLayout l = layout_augmented(p.aug, p.cs, tangent.result.f);
    const Eigen::MatrixXd m = constraint_matrix(p.aug, realize_mpoints(l, p.cs, tangent.result.f));
    const RankReport r = numerical_rank(m, 1e-10);
    std::printf("[INFO] 11 rank experiment: %ldx%ld rank %d (reported only)\n", static_cast<long>(m.rows()),
                static_cast<long>(m.cols()), r.rank);
    std::printf("       spectrum %s\n", rank_to_json(m, r).dump().c_str());
  }

  // 12
  {
    const Problem p = load_preset("hex_tangent");
    const Label flat = hex_exact_label(p);
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(-0.05, 0.05);
    Label start = flat;
    for (Eigen::Index i = 0; i < start.size(); ++i) start[i] += u(rng);
    FlowOptions o;
    o.T = 50.0;
    o.dt = 0.01;
    const auto t0 = Clock::now();
    const FlowResult r = curvature_flow(p.aug, p.cs, start, o);
    const double secs = seconds_since(t0);
    const double reduction = r.residuals.front() / std::max(r.residuals.back(), 1e-300);
    const FlowResult still = curvature_flow(p.aug, p.cs, flat, o);
    const double drift = std::max(still.residuals.back(), (still.f - flat).cwiseAbs().maxCoeff());
    report(12, reduction >= 1e3 && secs < 5.0 && drift <= 1e-12, "curvature flow",
           "reduction=" + fmt("%.2e", reduction) + " t=" + fmt("%.3fs", secs) + " equilibrium drift=" +
               fmt("%.2e", drift));
  }

  std::printf("%s\n", failures == 0 ? "all asserted criteria passed" : "some criteria failed");
  return failures == 0 ? 0 : 1;
}
