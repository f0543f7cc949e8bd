#pragma once

#include "gaseq/lcp/brute_force.hpp"
#include "gaseq/lcp/lemke.hpp"
#include "gaseq/lcp/newton.hpp"

namespace gaseq::lcp {

/// Rows above which the Newton path is tried before pivoting.
inline constexpr int kPivotingSizeLimit = 500;

/// Dispatch by instance size: pivoting is exact and preferred at desk scale,
/// the FB Newton path takes over on large systems. Falls back to the other
/// method when the first choice does not return a solved status.
inline LcpSolution solve_auto(const LcpProblem& problem, const SolverOptions& opts = {}) {
  if (problem.dim() <= kPivotingSizeLimit) {
    LcpSolution sol = solve_lemke(problem, opts);
    if (sol.status == SolveStatus::kSolved) return sol;
    LcpSolution alt =
        solve_fb_newton(problem, Eigen::VectorXd::Zero(problem.dim()), opts);
    return alt.status == SolveStatus::kSolved ? alt : sol;
  }
  LcpSolution sol = solve_fb_newton(problem, Eigen::VectorXd::Zero(problem.dim()), opts);
  if (sol.status == SolveStatus::kSolved) return sol;
  LcpSolution alt = solve_lemke(problem, opts);
  return alt.status == SolveStatus::kSolved ? alt : sol;
}

}  // namespace gaseq::lcp
