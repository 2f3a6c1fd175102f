// duniform command-line interface.

#include <cmath>
#include <fstream>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "duniform/io.hpp"
#include "duniform/measures.hpp"

using namespace duniform;

namespace {

struct Common {
  std::string input;
  std::string out;
};

struct SolveFlags {
  std::string method = "newton";
  double tol = 1e-10;
  int max_iter = 100;
  double svd_cutoff = 1e-10;
  double dt = 0.01;
  double time = 50.0;
  std::uint64_t seed = 0;
  double perturb = 0.0;
  std::optional<double> hat_init;
};

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw Error(ErrorCode::Schema, "cannot write " + out);
  f << text;
}

void emit(const json& doc, const std::string& out) { emit(doc.dump(2) + "\n", out); }

void perturb_label(Label& f, double amplitude, std::uint64_t seed) {
  if (amplitude == 0.0) return;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-amplitude, amplitude);
  for (Eigen::Index i = 0; i < f.size(); ++i) f[i] += u(rng);
}

Label starting_label(const Problem& p, const SolveFlags& s) {
  Label f = p.f;
  if (s.hat_init) f[p.aug.apex()] = *s.hat_init;
  perturb_label(f, s.perturb, s.seed);
  return f;
}

struct Solved {
  Label f;
  json report;
  bool ok = false;
};

Solved run_solver(const Problem& p, const SolveFlags& s) {
  const Label f0 = starting_label(p, s);
  Solved out;
  if (s.method == "newton") {
    NewtonOptions o;
    o.tol = s.tol;
    o.max_iter = s.max_iter;
    o.svd_cutoff = s.svd_cutoff;
    const NewtonResult r = newton_flat(p.aug, p.cs, f0, o);
    out.f = r.f;
    out.report = newton_to_json(r);
    out.report["method"] = "newton";
    out.ok = r.converged;
  } else {
    FlowOptions o;
    o.dt = s.dt;
    o.T = s.time;
    const FlowResult r = curvature_flow(p.aug, p.cs, f0, o);
    out.f = r.f;
    const double final_residual = r.residuals.empty() ? 0.0 : r.residuals.back();
    out.report["method"] = "flow";
    out.report["time"] = r.times.empty() ? 0.0 : r.times.back();
    out.report["steps"] = r.times.empty() ? 0 : r.times.size() - 1;
    out.report["halvings"] = r.halvings;
    out.report["initial_residual"] = r.residuals.empty() ? 0.0 : r.residuals.front();
    out.report["residual"] = final_residual;
    out.report["converged"] = final_residual <= s.tol;
    out.ok = final_residual <= s.tol;
  }
  const Label g = gauge_normalize(p.aug, out.f);
  out.report["label"] = label_to_json(p.aug, out.f);
  out.report["gauge_label"] = label_to_json(p.aug, g);
  return out;
}

void add_solve_flags(CLI::App* cmd, SolveFlags& s) {
  cmd->add_option("--tol", s.tol, "Target max |K|");
  cmd->add_option("--max-iter", s.max_iter, "Newton iteration limit");
  cmd->add_option("--svd-cutoff", s.svd_cutoff, "Relative singular value cutoff");
  cmd->add_option("--dt", s.dt, "Flow time step");
  cmd->add_option("--time", s.time, "Flow end time");
  cmd->add_option("--seed", s.seed, "Seed for --perturb");
  cmd->add_option("--perturb", s.perturb, "Uniform perturbation amplitude of the start label");
  cmd->add_option("--hat-init", s.hat_init, "Start value at the apex");
}

/// Label for the geometric commands: the file's f_init, or a Newton solution with --solve.
Label flat_label(const Problem& p, bool solve, const SolveFlags& s) {
  if (!solve) return p.f;
  Solved r = run_solver(p, s);
  if (!r.ok) throw Error(ErrorCode::MaxIterations, "solver did not reach --tol");
  return r.f;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete uniformization of triangulated disks"};
  app.require_subcommand(1);

  Common c;
  SolveFlags s;
  bool solve_first = false;

  auto* validate = app.add_subcommand("validate", "Check a problem file and print its combinatorics");
  validate->add_option("input", c.input)->required();

  std::string preset_name;
  PresetParams pp;
  std::string preset_scenario;
  auto* pre = app.add_subcommand("preset", "Write a preset problem");
  pre->add_option("name", preset_name, "hex_tangent | hex_orthogonal | hex_inscribed | ring_lattice | triangle")
      ->required();
  pre->add_option("--rings", pp.rings, "Rings of ring_lattice");
  pre->add_option("--scenario", preset_scenario, "tangent | orthogonal | inscribed");
  pre->add_option("--out", c.out);

  auto* curv = app.add_subcommand("curvature", "Curvature of the f_init label");
  curv->add_option("input", c.input)->required();
  curv->add_option("--out", c.out);

  auto* solve = app.add_subcommand("solve", "Find a flat label");
  solve->add_option("input", c.input)->required();
  solve->add_option("--method", s.method)->check(CLI::IsMember({"newton", "flow"}));
  solve->add_option("--out", c.out);
  add_solve_flags(solve, s);

  std::string traversal = "bfs";
  bool normalize = false;
  auto* lay = app.add_subcommand("layout", "Lay out a flat label in the plane");
  lay->add_option("input", c.input)->required();
  lay->add_option("--traversal", traversal)->check(CLI::IsMember({"bfs", "dfs"}));
  lay->add_flag("--normalize", normalize, "Move the apex circle to the unit circle");
  lay->add_flag("--solve", solve_first, "Run Newton before laying out");
  lay->add_option("--out", c.out);
  add_solve_flags(lay, s);

  auto* render = app.add_subcommand("render", "Draw a flat label as SVG");
  render->add_option("input", c.input)->required();
  render->add_flag("--normalize", normalize, "Move the apex circle to the unit circle");
  render->add_flag("--solve", solve_first, "Run Newton before drawing");
  render->add_option("--out", c.out);
  add_solve_flags(render, s);

  auto* rank = app.add_subcommand("rank", "Numerical rank of the constraint matrix at a flat label");
  rank->add_option("input", c.input)->required();
  rank->add_flag("--solve", solve_first, "Run Newton first");
  rank->add_option("--out", c.out);
  add_solve_flags(rank, s);

  double eps = 1e-3;
  auto* mob = app.add_subcommand("mobius-check", "Transport a flat label along the six Mobius generators");
  mob->add_option("input", c.input)->required();
  mob->add_option("--eps", eps);
  mob->add_flag("--solve", solve_first, "Run Newton first");
  mob->add_option("--out", c.out);
  add_solve_flags(mob, s);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*pre) {
      if (!preset_scenario.empty()) pp.scenario = parse_scenario(preset_scenario);
      emit(preset(preset_name, pp), c.out);
      return 0;
    }

    const Problem p = load_problem(c.input);
    const auto& base = p.aug.base();

    if (*validate) {
      json r;
      r["vertices"] = base.num_vertices();
      r["edges"] = base.num_edges();
      r["faces"] = base.num_faces();
      r["boundary_vertices"] = base.boundary_cycle().size();
      r["interior_vertices"] = base.num_interior_vertices();
      r["euler_characteristic"] = base.euler_characteristic();
      r["augmented"] = {{"vertices", p.aug.num_vertices()},
                        {"edges", p.aug.num_edges()},
                        {"faces", p.aug.num_faces()}};
      emit(r, c.out);
      return 0;
    }

    if (*curv) {
      const CurvatureVector K = curvature(p.aug, p.cs, p.f);
      json r;
      r["curvature"] = label_to_json(p.aug, K);
      r["sum"] = K.sum();
      r["max_abs"] = K.cwiseAbs().maxCoeff();
      emit(r, c.out);
      return 0;
    }

    if (*solve) {
      const Solved r = run_solver(p, s);
      Problem solved{p.aug, p.cs, r.f, p.scenario};
      json doc = serialize_problem(solved);
      doc["solution"] = r.report;
      emit(doc, c.out);
      return r.ok ? 0 : 2;
    }

    const Label f = flat_label(p, solve_first, s);

    if (*lay || *render) {
      LayoutOptions lo;
      lo.traversal = traversal == "dfs" ? Traversal::DepthFirst : Traversal::BreadthFirst;
      PlaneLayout layout = layout_augmented(p.aug, p.cs, f, lo);
      std::vector<MPoint> xi = realize_mpoints(layout, p.cs, f);
      Label shown = f;
      if (normalize) {
        NormalizedConfiguration n = normalize_to_unit_disk(p.aug, layout, xi);
        layout = std::move(n.layout);
        xi = std::move(n.mpoints);
        shown = std::move(n.f);
      }
      if (*render) {
        emit(render_svg(p.aug, layout, p.cs, shown), c.out);
        return 0;
      }
      json r = layout_to_json(p.aug, layout, xi);
      const RealizationResidual rr = realization_residual(p.aug, p.cs, xi);
      r["realization_residual"] = {{"vertex", rr.vertex}, {"edge", rr.edge}};
      r["label"] = label_to_json(p.aug, shown);
      bool ok = true;
      if (normalize && p.scenario) {
        const BoundaryReport br = verify_boundary_condition(p.aug, xi, *p.scenario);
        r["boundary"] = boundary_report_to_json(p.aug, br);
        ok = br.passed;
      }
      emit(r, c.out);
      return ok ? 0 : 2;
    }

    if (*rank) {
      const PlaneLayout layout = layout_augmented(p.aug, p.cs, f);
      const auto xi = realize_mpoints(layout, p.cs, f);
      const Eigen::MatrixXd m = constraint_matrix(p.aug, xi);
      emit(rank_to_json(m, numerical_rank(m, s.svd_cutoff)), c.out);
      return 0;
    }

    if (*mob) {
      const char* names[] = {"a", "b", "c", "d", "t", "r"};
      json r = json::array();
      for (int k = 0; k < 6; ++k) {
        InfinitesimalMobius g{};
        double* fields[] = {&g.a, &g.b, &g.c, &g.d, &g.t, &g.r};
        *fields[k] = 1.0;
        const OrbitReport o = mobius_orbit_check(p.aug, p.cs, f, g, eps);
        r.push_back({{"generator", names[k]},
                     {"eps", eps},
                     {"max_curvature", o.max_curvature},
                     {"max_variation_error", o.max_variation_error}});
      }
      emit(r, c.out);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return is_numerical(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}
