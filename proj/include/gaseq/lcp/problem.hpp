#pragma once

#include <Eigen/Core>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace gaseq::lcp {

/// Dense affine complementarity problem: find z >= 0 with w = M z + q >= 0
/// and z_i * w_i = 0 for every row.
struct LcpProblem {
  Eigen::MatrixXd m;
  Eigen::VectorXd q;
  /// Optional per-row descriptors (model condition names). Empty or size d.
  std::vector<std::string> labels;

  int dim() const { return static_cast<int>(q.size()); }

  /// Throws std::invalid_argument on dimension mismatch or non-finite data.
  void validate() const {
    if (m.rows() != m.cols()) {
      throw std::invalid_argument("LcpProblem: matrix is not square");
    }
    if (m.rows() != q.size()) {
      throw std::invalid_argument("LcpProblem: q length does not match matrix dimension");
    }
    if (q.size() < 1) {
      throw std::invalid_argument("LcpProblem: dimension must be >= 1");
    }
    if (!m.allFinite() || !q.allFinite()) {
      throw std::invalid_argument("LcpProblem: entries must be finite");
    }
    if (!labels.empty() && static_cast<int>(labels.size()) != dim()) {
      throw std::invalid_argument("LcpProblem: label count does not match dimension");
    }
  }

  std::string label(int row) const {
    if (row >= 0 && row < static_cast<int>(labels.size())) return labels[row];
    return "row " + std::to_string(row);
  }
};

enum class SolveStatus {
  kSolved,
  kRayTermination,
  kIterationLimit,
  kNumericalFailure,
};

inline const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::kSolved: return "solved";
    case SolveStatus::kRayTermination: return "ray_termination";
    case SolveStatus::kIterationLimit: return "iteration_limit";
    case SolveStatus::kNumericalFailure: return "numerical_failure";
  }
  return "unknown";
}

struct SolverOptions {
  double feas_tol = 1e-9;
  double comp_tol = 1e-8;
  int max_pivots = 20000;
  int max_newton_iters = 200;
  /// Fischer-Burmeister perturbation; 0 solves the exact reformulation.
  double fb_smoothing = 0.0;

  void validate() const {
    if (!(feas_tol > 0) || !(comp_tol > 0)) {
      throw std::invalid_argument("SolverOptions: tolerances must be positive");
    }
    if (max_pivots < 1 || max_newton_iters < 1) {
      throw std::invalid_argument("SolverOptions: iteration limits must be >= 1");
    }
    if (fb_smoothing < 0) {
      throw std::invalid_argument("SolverOptions: fb_smoothing must be >= 0");
    }
  }
};

struct LcpSolution {
  Eigen::VectorXd z;
  Eigen::VectorXd w;
  double complementarity_residual = 0.0;
  double feasibility_residual = 0.0;
  SolveStatus status = SolveStatus::kNumericalFailure;
  int iterations = 0;
};

struct ResidualReport {
  double feasibility_residual = 0.0;
  double complementarity_residual = 0.0;
  int worst_row = -1;
  std::string worst_label;

  bool within(double feas_tol, double comp_tol) const {
    return feasibility_residual <= feas_tol && complementarity_residual <= comp_tol;
  }
};

/// Pure residual evaluation of a candidate z against the problem.
inline ResidualReport verify_complementarity(const LcpProblem& problem,
                                             const Eigen::VectorXd& z,
                                             double tol = 0.0) {
  problem.validate();
  if (z.size() != problem.q.size()) {
    throw std::invalid_argument("verify_complementarity: z length mismatch");
  }
  (void)tol;
  const Eigen::VectorXd w = problem.m * z + problem.q;
  ResidualReport report;
  double worst = -1.0;
  for (int i = 0; i < problem.dim(); ++i) {
    const double feas = std::max(0.0, std::max(-z[i], -w[i]));
    const double comp = std::abs(z[i] * w[i]);
    report.feasibility_residual = std::max(report.feasibility_residual, feas);
    report.complementarity_residual = std::max(report.complementarity_residual, comp);
    const double offence = std::max(feas, comp);
    if (offence > worst) {
      worst = offence;
      report.worst_row = i;
    }
  }
  if (report.worst_row >= 0) report.worst_label = problem.label(report.worst_row);
  return report;
}

namespace detail {

/// Fills residuals and status on a solution whose z is already set.
inline void finish_solution(const LcpProblem& problem, const SolverOptions& opts,
                            LcpSolution& sol, SolveStatus status_if_feasible) {
  sol.w = problem.m * sol.z + problem.q;
  double feas = 0.0, comp = 0.0;
  for (int i = 0; i < problem.dim(); ++i) {
    feas = std::max(feas, std::max(0.0, std::max(-sol.z[i], -sol.w[i])));
    comp = std::max(comp, std::abs(sol.z[i] * sol.w[i]));
  }
  sol.feasibility_residual = feas;
  sol.complementarity_residual = comp;
  if (status_if_feasible == SolveStatus::kSolved &&
      !(feas <= opts.feas_tol && comp <= opts.comp_tol)) {
    sol.status = SolveStatus::kNumericalFailure;
  } else {
    sol.status = status_if_feasible;
  }
}

/// Re-solves the complementary basis `z_basic` directly against (M, q).
/// Returns false when the basis submatrix is numerically singular.
inline bool polish_basis(const LcpProblem& problem, const std::vector<int>& basic,
                         Eigen::VectorXd& z) {
  const int k = static_cast<int>(basic.size());
  z = Eigen::VectorXd::Zero(problem.dim());
  if (k == 0) return true;
  Eigen::MatrixXd sub(k, k);
  Eigen::VectorXd rhs(k);
  for (int r = 0; r < k; ++r) {
    rhs[r] = -problem.q[basic[r]];
    for (int c = 0; c < k; ++c) sub(r, c) = problem.m(basic[r], basic[c]);
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(sub);
  if (!lu.isInvertible()) return false;
  const Eigen::VectorXd zb = lu.solve(rhs);
  if (!zb.allFinite()) return false;
  for (int r = 0; r < k; ++r) z[basic[r]] = zb[r];
  return true;
}

}  // namespace detail

}  // namespace gaseq::lcp
