#pragma once

#include <Eigen/Dense>
#include <limits>
#include <vector>

#include "gaseq/lcp/problem.hpp"

namespace gaseq::lcp {

namespace detail {

// Tableau layout: columns [0, n) record B^-1 (the w block), [n, 2n) the z
// block, 2n the covering variable z0, 2n+1 the right-hand side.
class LemkeTableau {
 public:
  explicit LemkeTableau(const LcpProblem& problem)
      : n_(problem.dim()), t_(n_, 2 * n_ + 2), basis_(n_) {
    t_.leftCols(n_) = Eigen::MatrixXd::Identity(n_, n_);
    t_.middleCols(n_, n_) = -problem.m;
    t_.col(2 * n_).setConstant(-1.0);
    t_.col(2 * n_ + 1) = problem.q;
    for (int i = 0; i < n_; ++i) basis_[i] = i;
  }

  int n() const { return n_; }
  int z0_col() const { return 2 * n_; }
  int rhs_col() const { return 2 * n_ + 1; }
  int basis(int row) const { return basis_[row]; }

  double rhs(int row) const { return t_(row, rhs_col()); }

  // Lexicographic comparison of rows i and j scaled by the entering column:
  // compares (rhs, w_0, ..., w_{n-1}) / t(., col). Returns true when row i
  // is strictly lexicographically smaller.
  bool lex_less(int i, int j, int col) const {
    const double ti = t_(i, col);
    const double tj = t_(j, col);
    const double scale = std::max({1.0, std::abs(rhs(i)), std::abs(rhs(j))});
    double d = rhs(i) * tj - rhs(j) * ti;
    if (std::abs(d) > kLexEps * scale) return d < 0;
    for (int c = 0; c < n_; ++c) {
      d = t_(i, c) * tj - t_(j, c) * ti;
      if (std::abs(d) > kLexEps) return d < 0;
    }
    return i < j;  // cannot happen for a nonsingular basis; keeps order total
  }

  // Minimum-ratio row for an entering column, lexicographic tie-breaking.
  // Returns -1 when the column has no positive entry (ray termination).
  int ratio_test(int col) const {
    int best = -1;
    for (int i = 0; i < n_; ++i) {
      if (t_(i, col) <= pivot_eps()) continue;
      if (best < 0 || lex_less(i, best, col)) best = i;
    }
    return best;
  }

  // Entry row for the covering variable: the row that keeps all rhs entries
  // nonnegative after the pivot, i.e. the lexicographic minimum over rows.
  int covering_entry_row() const {
    int best = 0;
    for (int i = 1; i < n_; ++i) {
      if (lex_less_plain(i, best)) best = i;
    }
    return best;
  }

  void pivot(int row, int col) {
    t_.row(row) /= t_(row, col);
    for (int i = 0; i < n_; ++i) {
      if (i == row) continue;
      const double f = t_(i, col);
      if (f != 0.0) t_.row(i) -= f * t_.row(row);
    }
    basis_[row] = col;
  }

  double pivot_eps() const { return 1e-11; }

 private:
  // Unscaled lexicographic comparison of (rhs, w block) rows.
  bool lex_less_plain(int i, int j) const {
    double d = rhs(i) - rhs(j);
    if (std::abs(d) > kLexEps * std::max(1.0, std::abs(rhs(j)))) return d < 0;
    for (int c = 0; c < n_; ++c) {
      d = t_(i, c) - t_(j, c);
      if (std::abs(d) > kLexEps) return d < 0;
    }
    return i < j;
  }

  static constexpr double kLexEps = 1e-12;

  int n_;
  Eigen::MatrixXd t_;
  std::vector<int> basis_;
};

}  // namespace detail

/// Lemke's complementary pivoting with lexicographic anti-cycling.
/// Deterministic: identical inputs take the identical pivot path.
inline LcpSolution solve_lemke(const LcpProblem& problem, const SolverOptions& opts = {}) {
  problem.validate();
  opts.validate();
  const int n = problem.dim();

  LcpSolution sol;
  sol.z = Eigen::VectorXd::Zero(n);

  // Trivial complementary solution.
  if (problem.q.minCoeff() >= 0.0) {
    detail::finish_solution(problem, opts, sol, SolveStatus::kSolved);
    return sol;
  }

  detail::LemkeTableau tab(problem);
  const int z0 = tab.z0_col();

  int row = tab.covering_entry_row();
  int leaving = tab.basis(row);  // a w variable
  tab.pivot(row, z0);
  int entering = leaving + n;  // complement of the leaving w

  bool done = false;
  int pivots = 1;
  for (; pivots < opts.max_pivots; ++pivots) {
    row = tab.ratio_test(entering);
    if (row < 0) {
      sol.iterations = pivots;
      detail::finish_solution(problem, opts, sol, SolveStatus::kRayTermination);
      sol.status = SolveStatus::kRayTermination;
      return sol;
    }
    leaving = tab.basis(row);
    tab.pivot(row, entering);
    if (leaving == z0) {
      done = true;
      ++pivots;
      break;
    }
    entering = (leaving < n) ? leaving + n : leaving - n;
  }
  if (!done) {
    sol.iterations = pivots;
    detail::finish_solution(problem, opts, sol, SolveStatus::kIterationLimit);
    sol.status = SolveStatus::kIterationLimit;
    return sol;
  }

  // Read off the complementary basis and re-solve it against the original
  // data; the tableau values carry accumulated elimination error.
  std::vector<int> basic;
  Eigen::VectorXd z_tab = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < n; ++i) {
    const int b = tab.basis(i);
    if (b >= n && b < 2 * n) {
      basic.push_back(b - n);
      z_tab[b - n] = tab.rhs(i);
    }
  }
  std::sort(basic.begin(), basic.end());

  Eigen::VectorXd z_polished;
  if (detail::polish_basis(problem, basic, z_polished)) {
    LcpSolution polished;
    polished.z = z_polished;
    detail::finish_solution(problem, opts, polished, SolveStatus::kSolved);
    sol.z = z_tab;
    detail::finish_solution(problem, opts, sol, SolveStatus::kSolved);
    const double raw = std::max(sol.feasibility_residual, sol.complementarity_residual);
    const double pol =
        std::max(polished.feasibility_residual, polished.complementarity_residual);
    if (pol <= raw) sol = polished;
  } else {
    sol.z = z_tab;
    detail::finish_solution(problem, opts, sol, SolveStatus::kSolved);
  }
  sol.iterations = pivots;
  return sol;
}

}  // namespace gaseq::lcp
