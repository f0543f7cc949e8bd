#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <vector>

#include "gaseq/lcp/problem.hpp"

namespace gaseq::lcp {

namespace detail {

// phi(a, b) = sqrt(a^2 + b^2 + 2 mu) - a - b. Zero iff a, b >= 0 and
// a * b = mu (the exact complementarity pair for mu = 0).
inline double fischer_burmeister(double a, double b, double mu) {
  return std::sqrt(a * a + b * b + 2.0 * mu) - a - b;
}

// Attempts an active-set polish: rows where z dominates w become basic.
inline bool fb_polish(const LcpProblem& problem, const SolverOptions& opts,
                      const Eigen::VectorXd& z, LcpSolution& out) {
  std::vector<int> basic;
  const Eigen::VectorXd w = problem.m * z + problem.q;
  for (int i = 0; i < problem.dim(); ++i) {
    if (z[i] > w[i]) basic.push_back(i);
  }
  Eigen::VectorXd polished;
  if (!polish_basis(problem, basic, polished)) return false;
  out.z = polished;
  finish_solution(problem, opts, out, SolveStatus::kSolved);
  return out.status == SolveStatus::kSolved;
}

}  // namespace detail

/// Semismooth Newton on the Fischer-Burmeister reformulation, with diagonal
/// regularization on singular Jacobians and Armijo backtracking on the
/// squared-residual merit function. Scales to instances where pivoting is
/// too slow; agrees with solve_lemke on uniquely solvable problems.
inline LcpSolution solve_fb_newton(const LcpProblem& problem, const Eigen::VectorXd& start,
                                   const SolverOptions& opts = {}) {
  problem.validate();
  opts.validate();
  const int n = problem.dim();
  if (start.size() != n) {
    throw std::invalid_argument("solve_fb_newton: start vector length mismatch");
  }

  const double mu = opts.fb_smoothing;
  Eigen::VectorXd z = start;
  Eigen::VectorXd w = problem.m * z + problem.q;

  auto residuals_ok = [&](const Eigen::VectorXd& zz, const Eigen::VectorXd& ww) {
    double feas = 0.0, comp = 0.0;
    for (int i = 0; i < n; ++i) {
      feas = std::max(feas, std::max(0.0, std::max(-zz[i], -ww[i])));
      comp = std::max(comp, std::abs(zz[i] * ww[i]));
    }
    return feas <= opts.feas_tol && comp <= opts.comp_tol;
  };

  auto merit = [&](const Eigen::VectorXd& zz) {
    const Eigen::VectorXd ww = problem.m * zz + problem.q;
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
      const double p = detail::fischer_burmeister(zz[i], ww[i], mu);
      s += p * p;
    }
    return 0.5 * s;
  };

  LcpSolution sol;
  const double m_scale = 1.0 + problem.m.cwiseAbs().maxCoeff();

  for (int iter = 0; iter <= opts.max_newton_iters; ++iter) {
    w = problem.m * z + problem.q;
    if (residuals_ok(z, w)) {
      LcpSolution polished;
      if (detail::fb_polish(problem, opts, z, polished)) {
        polished.iterations = iter;
        return polished;
      }
      sol.z = z;
      detail::finish_solution(problem, opts, sol, SolveStatus::kSolved);
      sol.iterations = iter;
      return sol;
    }
    if (iter == opts.max_newton_iters) break;

    Eigen::VectorXd phi(n);
    Eigen::VectorXd da(n), db(n);
    for (int i = 0; i < n; ++i) {
      const double r = std::sqrt(z[i] * z[i] + w[i] * w[i] + 2.0 * mu);
      phi[i] = r - z[i] - w[i];
      if (r > 1e-14) {
        da[i] = z[i] / r - 1.0;
        db[i] = w[i] / r - 1.0;
      } else {
        // Subgradient choice at the kink.
        da[i] = db[i] = 1.0 / std::numbers::sqrt2 - 1.0;
      }
    }

    Eigen::MatrixXd jac = db.asDiagonal() * problem.m;
    jac.diagonal() += da;

    // Solve the Newton system, regularizing until it is usable.
    Eigen::VectorXd dir;
    double tau = 0.0;
    bool have_dir = false;
    for (int attempt = 0; attempt < 7; ++attempt) {
      Eigen::MatrixXd jr = jac;
      if (tau > 0.0) jr.diagonal().array() += tau;
      Eigen::PartialPivLU<Eigen::MatrixXd> lu(jr);
      dir = lu.solve(-phi);
      if (dir.allFinite() &&
          (jr * dir + phi).cwiseAbs().maxCoeff() <= 1e-6 * (1.0 + phi.cwiseAbs().maxCoeff())) {
        have_dir = true;
        break;
      }
      tau = (tau == 0.0) ? 1e-10 * m_scale : tau * 100.0;
    }
    if (!have_dir) {
      sol.z = z;
      detail::finish_solution(problem, opts, sol, SolveStatus::kNumericalFailure);
      sol.status = SolveStatus::kNumericalFailure;
      sol.iterations = iter;
      return sol;
    }

    const double psi0 = merit(z);
    double t = 1.0;
    bool stepped = false;
    for (int ls = 0; ls < 40; ++ls) {
      if (merit(z + t * dir) <= (1.0 - 1e-4 * t) * psi0) {
        z += t * dir;
        stepped = true;
        break;
      }
      t *= 0.5;
    }
    if (!stepped) {
      sol.z = z;
      detail::finish_solution(problem, opts, sol, SolveStatus::kNumericalFailure);
      sol.status = SolveStatus::kNumericalFailure;
      sol.iterations = iter;
      return sol;
    }
  }

  sol.z = z;
  detail::finish_solution(problem, opts, sol, SolveStatus::kIterationLimit);
  sol.status = SolveStatus::kIterationLimit;
  sol.iterations = opts.max_newton_iters;
  return sol;
}

}  // namespace gaseq::lcp
