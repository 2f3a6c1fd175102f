#include "duniform/solver.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

namespace duniform {

namespace {

double inf_norm(const Eigen::VectorXd& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

void require_admissible_start(const AugmentedDisk& aug, const ConformalStructure& cs, const Label& f0) {
  if (f0.size() != static_cast<Eigen::Index>(aug.num_vertices()) || !f0.allFinite()) {
    throw Error(ErrorCode::InadmissibleStart, "label size or values invalid");
  }
  const auto adm = admissible(aug, cs, f0);
  if (!adm.ok) throw Error(ErrorCode::InadmissibleStart, adm.first->message);
}

// Curvature if f is admissible, nothing otherwise.
std::optional<CurvatureVector> try_curvature(const AugmentedDisk& aug, const ConformalStructure& cs, const Label& f,
                                             Execution exec) {
  if (!f.allFinite()) return std::nullopt;
  try {
    return curvature(aug, cs, f, exec);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

Eigen::VectorXd truncated_pinv_solve(const Eigen::MatrixXd& J, const Eigen::VectorXd& rhs, double cutoff) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(J, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& s = svd.singularValues();
  Eigen::VectorXd x = Eigen::VectorXd::Zero(J.cols());
  if (s.size() == 0 || s[0] <= 0.0) return x;
  const double floor = cutoff * s[0];
  const Eigen::VectorXd ut_b = svd.matrixU().transpose() * rhs;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s[i] > floor) x += (ut_b[i] / s[i]) * svd.matrixV().col(i);
  }
  return x;
}

NewtonResult newton_flat(const AugmentedDisk& aug, const ConformalStructure& cs, const Label& f0,
                         const NewtonOptions& opts) {
  require_admissible_start(aug, cs, f0);

  NewtonResult out;
  out.f = f0;
  CurvatureVector K = curvature(aug, cs, out.f, opts.exec);
  out.residual = inf_norm(K);
  out.residual_history.push_back(out.residual);

  for (int it = 0; it < opts.max_iter; ++it) {
    if (out.residual <= opts.tol) {
      out.converged = true;
      out.iterations = it;
      return out;
    }
    const auto kj = curvature_and_jacobian(aug, cs, out.f, opts.exec);
    const Eigen::VectorXd step = -truncated_pinv_solve(kj.J, kj.K, opts.svd_cutoff);

    double lambda = 1.0;
    bool accepted = false;
    for (int h = 0; h <= opts.max_halvings; ++h, lambda *= 0.5) {
      const Label trial = out.f + lambda * step;
      auto Kt = try_curvature(aug, cs, trial, opts.exec);
      if (!Kt) continue;
      const double rt = inf_norm(*Kt);
      if (rt < out.residual) {
        out.f = trial;
        K = std::move(*Kt);
        out.residual = rt;
        accepted = true;
        break;
      }
    }
    out.residual_history.push_back(out.residual);
    if (!accepted) {
      out.iterations = it + 1;
      out.failure = ErrorCode::LineSearchStalled;
      out.message = "no admissible decrease after " + std::to_string(opts.max_halvings) + " halvings";
      return out;
    }
  }
  out.iterations = opts.max_iter;
  if (out.residual <= opts.tol) {
    out.converged = true;
  } else {
    out.failure = ErrorCode::MaxIterations;
    out.message = "residual " + std::to_string(out.residual) + " after " + std::to_string(opts.max_iter) + " iterations";
  }
  return out;
}

FlowResult curvature_flow(const AugmentedDisk& aug, const ConformalStructure& cs, const Label& f0,
                          const FlowOptions& opts) {
  require_admissible_start(aug, cs, f0);
  const auto n = static_cast<Eigen::Index>(aug.num_vertices());
  Eigen::VectorXd sign = Eigen::VectorXd::Constant(n, -1.0);
  sign[aug.apex()] = 1.0;

  auto rhs = [&](const Label& f) -> std::optional<Eigen::VectorXd> {
    auto K = try_curvature(aug, cs, f, opts.exec);
    if (!K) return std::nullopt;
    return Eigen::VectorXd(sign.cwiseProduct(*K));
  };

  FlowResult out;
  out.f = f0;
  double t = 0.0;
  out.times.push_back(t);
  out.residuals.push_back(inf_norm(curvature(aug, cs, f0, opts.exec)));
  if (opts.record_every > 0) out.states.push_back(f0);

  std::size_t accepted = 0;
  while (t < opts.T - 1e-12 * std::max(1.0, opts.T)) {
    double h = std::min(opts.dt, opts.T - t);
    bool done = false;
    for (int halving = 0; halving <= opts.max_halvings; ++halving) {
      if (halving > 0) {
        h *= 0.5;
        ++out.halvings;
      }
      const auto k1 = rhs(out.f);
      if (!k1) break;  // the current state is admissible; this cannot happen
      const auto k2 = rhs(out.f + 0.5 * h * *k1);
      if (!k2) continue;
      const auto k3 = rhs(out.f + 0.5 * h * *k2);
      if (!k3) continue;
      const auto k4 = rhs(out.f + h * *k3);
      if (!k4) continue;
      const Label next = out.f + (h / 6.0) * (*k1 + 2.0 * *k2 + 2.0 * *k3 + *k4);
      auto Kn = try_curvature(aug, cs, next, opts.exec);
      if (!Kn) continue;
      out.f = next;
      t += h;
      out.times.push_back(t);
      out.residuals.push_back(inf_norm(*Kn));
      done = true;
      break;
    }
    if (!done) {
      throw Error(ErrorCode::StepCollapse, "no admissible step at t = " + std::to_string(t));
    }
    ++accepted;
    if (opts.record_every > 0 && accepted % static_cast<std::size_t>(opts.record_every) == 0) {
      out.states.push_back(out.f);
    }
  }
  return out;
}

Label gauge_normalize(const AugmentedDisk& aug, const Label& f) {
  return (f.array() - f[aug.apex()]).matrix();
}

Label default_initial_label(const AugmentedDisk& aug) {
  return default_initial_label(aug, Eigen::VectorXd::Zero(static_cast<Eigen::Index>(aug.base().num_vertices())));
}

Label default_initial_label(const AugmentedDisk& aug, const Eigen::VectorXd& disk_values) {
  const auto n = static_cast<Eigen::Index>(aug.base().num_vertices());
  Label f(n + 1);
  f.head(n) = disk_values;
  double m = 0.0;
  for (Eigen::Index v = 0; v < n; ++v) m = std::max(m, std::exp(disk_values[v]));
  f[n] = std::log(2.0 * m + 1.0);
  return f;
}

}  // namespace duniform
