#pragma once

#include <vector>

#include "deaic/lp.hpp"

namespace deaic::testing {

struct OracleResult {
  LpStatus status = LpStatus::Infeasible;
  double objective_value = 0.0;
  std::vector<double> best_vertex;
};

/// Brute-force reference solve: intersects every n-subset of the
/// constraint/bound hyperplanes with Gaussian elimination, keeps the
/// feasible intersections, takes the best objective, and enumerates the
/// normalized recession cone for an improving extreme ray (Unbounded).
/// Shares no code with the simplex path. Exponential in size; for small
/// test programs only. Requires every variable to have a finite lower
/// bound so the feasible region is pointed.
OracleResult enumerate_solve(const LinearProgram& lp);

}  // namespace deaic::testing
