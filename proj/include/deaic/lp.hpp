#pragma once

#include <cstddef>
#include <limits>
#include <vector>

namespace deaic {

enum class Relation { LessEqual, GreaterEqual, Equal };

/// One dense constraint row: coefficients . x  <relation>  rhs.
struct Constraint {
  std::vector<double> coefficients;
  Relation relation = Relation::LessEqual;
  double rhs = 0.0;
};

/// Dense linear program in natural form:
///
///   maximize  objective . x
///   s.t.      every Constraint row holds
///             x[j] >= lower_bounds[j]
///
/// lower_bounds defaults to all zeros when left empty; an entry may be
/// -infinity (kFreeVariable) to make that variable free. Upper bounds are
/// expressed as constraint rows.
struct LinearProgram {
  std::vector<double> objective;
  std::vector<Constraint> constraints;
  std::vector<double> lower_bounds;

  static constexpr double kFreeVariable =
      -std::numeric_limits<double>::infinity();

  std::size_t variable_count() const { return objective.size(); }

  void add_constraint(std::vector<double> coefficients, Relation relation,
                      double rhs) {
    constraints.push_back({std::move(coefficients), relation, rhs});
  }

  double lower_bound(std::size_t var) const {
    return lower_bounds.empty() ? 0.0 : lower_bounds[var];
  }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  double objective_value = 0.0;   // meaningful iff status == Optimal
  std::vector<double> variables;  // meaningful iff status == Optimal
  int iterations = 0;
};

/// Solves the program with a two-phase dense simplex (phase 1 drives
/// artificial variables of >= and = rows to zero, phase 2 optimizes).
/// Dantzig pricing with a switch to Bland's rule after a stall, so the
/// method always terminates. Pivot tolerance 1e-10, feasibility and
/// optimality tolerance 1e-8; rows are scaled by their largest coefficient
/// magnitude before solving. Deterministic for a given input.
///
/// Throws InvalidInput on dimension mismatches or non-finite entries.
LpSolution solve(const LinearProgram& lp);

/// Largest row-scaled constraint or bound violation of x, zero when x is
/// feasible. Rows are scaled exactly as in solve().
double max_constraint_violation(const LinearProgram& lp,
                                const std::vector<double>& x);

}  // namespace deaic
