#pragma once

// Searches for flat labels of the augmented disk: Newton iterations through a truncated
// pseudoinverse of the curvature Jacobian, and an explicit curvature flow.

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "duniform/conformal.hpp"

namespace duniform {

struct NewtonOptions {
  double tol = 1e-10;         // on ||K||_inf
  int max_iter = 100;
  double svd_cutoff = 1e-10;  // singular values below cutoff * sigma_max are dropped
  int max_halvings = 40;
  Execution exec = Execution::Parallel;
};

struct NewtonResult {
  Label f;
  bool converged = false;
  int iterations = 0;
  double residual = 0.0;
  std::vector<double> residual_history;  // ||K||_inf at the start and after every accepted step
  std::optional<ErrorCode> failure;      // LineSearchStalled or MaxIterations
  std::string message;
};

/// Minimum-norm least-squares solution of J x = rhs with singular values below cutoff * sigma_max dropped.
Eigen::VectorXd truncated_pinv_solve(const Eigen::MatrixXd& J, const Eigen::VectorXd& rhs, double cutoff);

/// Throws InadmissibleStart if f0 is not admissible. Every accepted iterate is admissible and
/// strictly decreases ||K||_inf.
NewtonResult newton_flat(const AugmentedDisk& aug, const ConformalStructure& cs, const Label& f0,
                         const NewtonOptions& opts = {});

struct FlowOptions {
  double T = 50.0;
  double dt = 0.01;
  int max_halvings = 30;
  /// Store every n-th accepted state in FlowResult::states; 0 stores none.
  int record_every = 0;
  Execution exec = Execution::Parallel;
};

struct FlowResult {
  Label f;
  std::vector<double> times;      // after each accepted step, starting at 0
  std::vector<double> residuals;  // ||K||_inf at those times
  std::vector<Label> states;
  int halvings = 0;  // total number of step halvings over the run
};

/// df_v/dt = -K_v off the apex and df/dt = +K at the apex, integrated with classical RK4.
/// A step whose stages leave the admissible set is halved, at most max_halvings times.
/// Throws InadmissibleStart or StepCollapse.
FlowResult curvature_flow(const AugmentedDisk& aug, const ConformalStructure& cs, const Label& f0,
                          const FlowOptions& opts = {});

/// f - f_apex, so that the apex value is 0. Curvatures are unchanged.
Label gauge_normalize(const AugmentedDisk& aug, const Label& f);

/// f = 0 on the disk (or the given disk values) and f_apex = log(2 max_v e^{f_v} + 1).
Label default_initial_label(const AugmentedDisk& aug);
Label default_initial_label(const AugmentedDisk& aug, const Eigen::VectorXd& disk_values);

}  // namespace duniform
