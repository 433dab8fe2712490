#pragma once

// Weighted l1 minimization
//
//   minimize ||z||_{w,1}  subject to  ||A z - y||_2 <= eta
//
// solved by an alternating-direction splitting over the blocks
//   z (least squares), w = z (weighted soft threshold), r = A z (ball projection).
// The z-update operator (I + A^T A)^{-1} is applied through the m x m Cholesky
// factor of I + A A^T (or the N x N factor when N <= m), computed once per solve.

#include "wcs/core.hpp"

#include <stdexcept>

namespace wcs::solver {

struct SolverOptions {
  int max_iterations = 50000;
  double primal_tolerance = 1e-9;
  double dual_tolerance = 1e-9;
  double penalty_parameter = 1.0;
  bool penalty_adaptation = false;
  /// Also stop once a feasible iterate has relative duality gap below this.
  double gap_tolerance = 1e-6;
  /// Re-solve least squares on the detected support after convergence and keep
  /// the result when it is no worse.
  bool polish = true;
  /// Weights above this value become hard zero constraints.
  double hard_weight_cap = 1e6;

  void validate() const;
};

struct SolveResult {
  Vector minimizer;
  double objective = 0.0;
  double residual_norm = 0.0;
  int iterations = 0;
  bool converged = false;
  bool polished = false;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
};

/// No point satisfies the constraint: the least-squares residual exceeds the noise level.
class InfeasibleStall : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Allowed overshoot of the constraint for a converged result.
double feasibility_slack(const SolverOptions& options, const Vector& y);

SolveResult solve_weighted_l1(const ProblemInstance& instance, const SolverOptions& options = {});

/// Same program with unit weights.
SolveResult solve_l1(const ProblemInstance& instance, const SolverOptions& options = {});

}  // namespace wcs::solver
