#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "gaseq/lcp/problem.hpp"

namespace gaseq::lcp {

inline constexpr int kBruteForceMaxDim = 20;

/// Exhaustive test oracle: enumerates all 2^d complementary index sets in
/// increasing mask order and returns the first basis whose solution is
/// feasible within feas_tol. Mask order makes z = 0 the first candidate.
inline LcpSolution brute_force_lcp(const LcpProblem& problem, const SolverOptions& opts = {}) {
  problem.validate();
  opts.validate();
  const int n = problem.dim();
  if (n > kBruteForceMaxDim) {
    throw std::invalid_argument("brute_force_lcp: dimension exceeds the 2^d enumeration limit (20)");
  }

  LcpSolution sol;
  std::vector<int> basic;
  basic.reserve(n);
  const std::uint32_t mask_end = std::uint32_t{1} << n;
  for (std::uint32_t mask = 0; mask < mask_end; ++mask) {
    basic.clear();
    for (int i = 0; i < n; ++i) {
      if (mask & (std::uint32_t{1} << i)) basic.push_back(i);
    }
    Eigen::VectorXd z;
    if (!detail::polish_basis(problem, basic, z)) continue;
    bool feasible = true;
    for (int i = 0; i < n && feasible; ++i) {
      if (z[i] < -opts.feas_tol) feasible = false;
    }
    if (!feasible) continue;
    const Eigen::VectorXd w = problem.m * z + problem.q;
    for (int i = 0; i < n && feasible; ++i) {
      if (w[i] < -opts.feas_tol) feasible = false;
    }
    if (!feasible) continue;
    sol.z = z;
    detail::finish_solution(problem, opts, sol, SolveStatus::kSolved);
    if (sol.status == SolveStatus::kSolved) {
      sol.iterations = static_cast<int>(mask);
      return sol;
    }
  }

  // No complementary basis works: the problem has no solution this
  // enumeration can certify.
  sol.z = Eigen::VectorXd::Zero(n);
  detail::finish_solution(problem, opts, sol, SolveStatus::kRayTermination);
  sol.status = SolveStatus::kRayTermination;
  return sol;
}

}  // namespace gaseq::lcp
