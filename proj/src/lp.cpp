#include "deaic/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "deaic/errors.hpp"

namespace deaic {

namespace {

constexpr double kPivotTol = 1e-10;
constexpr double kFeasTol = 1e-8;
constexpr double kOptTol = 1e-8;
constexpr int kIterationCap = 50000;

void validate(const LinearProgram& lp) {
  const std::size_t n = lp.variable_count();
  if (n == 0) throw InvalidInput("linear program has no variables");
  for (double c : lp.objective) {
    if (!std::isfinite(c)) throw InvalidInput("non-finite objective coefficient");
  }
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    const Constraint& row = lp.constraints[i];
    if (row.coefficients.size() != n) {
      throw InvalidInput("constraint " + std::to_string(i) +
                         " has wrong coefficient count");
    }
    for (double a : row.coefficients) {
      if (!std::isfinite(a)) {
        throw InvalidInput("non-finite coefficient in constraint " +
                           std::to_string(i));
      }
    }
    if (!std::isfinite(row.rhs)) {
      throw InvalidInput("non-finite right-hand side in constraint " +
                         std::to_string(i));
    }
  }
  if (!lp.lower_bounds.empty()) {
    if (lp.lower_bounds.size() != n) {
      throw InvalidInput("lower_bounds length does not match variable count");
    }
    for (double b : lp.lower_bounds) {
      if (std::isnan(b) || b == std::numeric_limits<double>::infinity()) {
        throw InvalidInput("invalid lower bound");
      }
    }
  }
}

// Standard-form image of the program: every column u >= 0, rows scaled so
// the largest coefficient magnitude is 1, right-hand sides >= 0. Bounded
// variables are shifted (x = l + u), free variables split (x = u+ - u-).
struct Standard {
  struct VarMap {
    int pos = -1;
    int neg = -1;  // -1 unless the variable is free
    double shift = 0.0;
  };

  std::size_t cols = 0;
  std::vector<VarMap> vars;
  std::vector<std::vector<double>> rows;
  std::vector<Relation> rel;
  std::vector<double> rhs;
  std::vector<double> obj;
  bool trivially_infeasible = false;
};

Standard standardize(const LinearProgram& lp) {
  const std::size_t n = lp.variable_count();
  Standard s;
  s.vars.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    double lb = lp.lower_bound(j);
    if (lb == LinearProgram::kFreeVariable) {
      s.vars[j].pos = static_cast<int>(s.cols++);
      s.vars[j].neg = static_cast<int>(s.cols++);
    } else {
      s.vars[j].pos = static_cast<int>(s.cols++);
      s.vars[j].shift = lb;
    }
  }

  s.obj.assign(s.cols, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    s.obj[s.vars[j].pos] += lp.objective[j];
    if (s.vars[j].neg >= 0) s.obj[s.vars[j].neg] -= lp.objective[j];
  }

  for (const Constraint& row : lp.constraints) {
    std::vector<double> a(s.cols, 0.0);
    double scale = 0.0;
    double b = row.rhs;
    for (std::size_t j = 0; j < n; ++j) {
      double c = row.coefficients[j];
      if (c == 0.0) continue;
      a[s.vars[j].pos] += c;
      if (s.vars[j].neg >= 0) a[s.vars[j].neg] -= c;
      b -= c * s.vars[j].shift;
      scale = std::max(scale, std::fabs(c));
    }
    if (scale == 0.0) {
      // 0 <relation> b decided directly.
      bool ok = false;
      switch (row.relation) {
        case Relation::LessEqual: ok = b >= -kFeasTol; break;
        case Relation::GreaterEqual: ok = b <= kFeasTol; break;
        case Relation::Equal: ok = std::fabs(b) <= kFeasTol; break;
      }
      if (!ok) s.trivially_infeasible = true;
      continue;
    }
    for (double& c : a) c /= scale;
    b /= scale;
    Relation rel = row.relation;
    if (b < 0.0) {
      for (double& c : a) c = -c;
      b = -b;
      if (rel == Relation::LessEqual) rel = Relation::GreaterEqual;
      else if (rel == Relation::GreaterEqual) rel = Relation::LessEqual;
    }
    s.rows.push_back(std::move(a));
    s.rel.push_back(rel);
    s.rhs.push_back(b);
  }
  return s;
}

// Full-tableau two-phase simplex over the standardized program.
class Simplex {
 public:
  explicit Simplex(const Standard& s) : structural_(s.cols) {
    const std::size_t m = s.rows.size();
    std::size_t slack = 0, artificial = 0;
    for (Relation r : s.rel) {
      if (r != Relation::Equal) ++slack;
      if (r != Relation::LessEqual) ++artificial;
    }
    cols_ = structural_ + slack + artificial;
    first_artificial_ = structural_ + slack;
    tableau_.assign(m, std::vector<double>(cols_ + 1, 0.0));
    basis_.resize(m);

    std::size_t next_slack = structural_;
    std::size_t next_art = first_artificial_;
    for (std::size_t i = 0; i < m; ++i) {
      std::copy(s.rows[i].begin(), s.rows[i].end(), tableau_[i].begin());
      tableau_[i][cols_] = s.rhs[i];
      switch (s.rel[i]) {
        case Relation::LessEqual:
          tableau_[i][next_slack] = 1.0;
          basis_[i] = next_slack++;
          break;
        case Relation::GreaterEqual:
          tableau_[i][next_slack] = -1.0;
          ++next_slack;
          tableau_[i][next_art] = 1.0;
          basis_[i] = next_art++;
          break;
        case Relation::Equal:
          tableau_[i][next_art] = 1.0;
          basis_[i] = next_art++;
          break;
      }
    }
  }

  LpStatus run(const std::vector<double>& objective, int& iterations) {
    iterations = 0;
    if (first_artificial_ < cols_) {
      // Phase 1: maximize minus the sum of artificials.
      std::vector<double> cost(cols_, 0.0);
      for (std::size_t j = first_artificial_; j < cols_; ++j) cost[j] = -1.0;
      set_costs(cost);
      if (!iterate(iterations, /*allow_artificial=*/false)) {
        // The phase-1 objective is bounded above by zero, so an unbounded
        // ray here means a numerical breakdown.
        throw InternalError("phase-1 simplex reported an unbounded ray");
      }
      if (value_ < -kFeasTol) return LpStatus::Infeasible;
      expel_artificials();
    }
    std::vector<double> cost(cols_, 0.0);
    std::copy(objective.begin(), objective.end(), cost.begin());
    set_costs(cost);
    if (!iterate(iterations, /*allow_artificial=*/false)) {
      return LpStatus::Unbounded;
    }
    return LpStatus::Optimal;
  }

  std::vector<double> structural_values() const {
    std::vector<double> u(structural_, 0.0);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (basis_[i] < structural_) {
        u[basis_[i]] = std::max(0.0, tableau_[i][cols_]);
      }
    }
    return u;
  }

 private:
  void set_costs(const std::vector<double>& cost) {
    cost_ = cost;
    reduced_.assign(cols_, 0.0);
    value_ = 0.0;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      value_ += cost_[basis_[i]] * tableau_[i][cols_];
    }
    for (std::size_t j = 0; j < cols_; ++j) {
      double rc = cost_[j];
      for (std::size_t i = 0; i < basis_.size(); ++i) {
        rc -= cost_[basis_[i]] * tableau_[i][j];
      }
      reduced_[j] = rc;
    }
  }

  // Runs pivots until optimal (true) or an unbounded ray appears (false).
  bool iterate(int& iterations, bool allow_artificial) {
    const std::size_t m = basis_.size();
    bool bland = false;
    int stall = 0;
    const int stall_limit = 2 * static_cast<int>(m + cols_);
    while (true) {
      if (++iterations > kIterationCap) {
        throw InternalError("simplex iteration cap exceeded");
      }
      std::size_t enter = cols_;
      if (bland) {
        for (std::size_t j = 0; j < cols_; ++j) {
          if (!allow_artificial && j >= first_artificial_) break;
          if (reduced_[j] > kOptTol) {
            enter = j;
            break;
          }
        }
      } else {
        double best = kOptTol;
        for (std::size_t j = 0; j < cols_; ++j) {
          if (!allow_artificial && j >= first_artificial_) break;
          if (reduced_[j] > best) {
            best = reduced_[j];
            enter = j;
          }
        }
      }
      if (enter == cols_) return true;

      std::size_t leave = m;
      double best_ratio = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        double a = tableau_[i][enter];
        if (a <= kPivotTol) continue;
        double ratio = tableau_[i][cols_] / a;
        bool better;
        if (leave == m) {
          better = true;
        } else if (bland) {
          better = ratio < best_ratio - 1e-12 ||
                   (ratio < best_ratio + 1e-12 && basis_[i] < basis_[leave]);
        } else {
          better = ratio < best_ratio - 1e-12 ||
                   (ratio < best_ratio + 1e-12 &&
                    std::fabs(a) > std::fabs(tableau_[leave][enter]));
        }
        if (better) {
          best_ratio = ratio;
          leave = i;
        }
      }
      if (leave == m) return false;

      double before = value_;
      pivot(leave, enter);
      if (!bland) {
        if (value_ <= before + 1e-12 * (1.0 + std::fabs(before))) {
          if (++stall >= stall_limit) bland = true;
        } else {
          stall = 0;
        }
      }
    }
  }

  void pivot(std::size_t r, std::size_t s) {
    std::vector<double>& prow = tableau_[r];
    const double inv = 1.0 / prow[s];
    for (double& v : prow) v *= inv;
    prow[s] = 1.0;
    for (std::size_t i = 0; i < tableau_.size(); ++i) {
      if (i == r) continue;
      double f = tableau_[i][s];
      if (std::fabs(f) < kPivotTol) {
        tableau_[i][s] = 0.0;
        continue;
      }
      std::vector<double>& row = tableau_[i];
      for (std::size_t j = 0; j <= cols_; ++j) row[j] -= f * prow[j];
      row[s] = 0.0;
    }
    double f = reduced_[s];
    if (f != 0.0) {
      for (std::size_t j = 0; j < cols_; ++j) reduced_[j] -= f * prow[j];
      reduced_[s] = 0.0;
      value_ += f * prow[cols_];
    }
    basis_[r] = s;
  }

  // After phase 1 every artificial is zero; pivot basic ones onto a real
  // column, or drop the row as redundant when none is available.
  void expel_artificials() {
    for (std::size_t i = 0; i < basis_.size();) {
      if (basis_[i] < first_artificial_) {
        ++i;
        continue;
      }
      std::size_t col = cols_;
      for (std::size_t j = 0; j < first_artificial_; ++j) {
        if (std::fabs(tableau_[i][j]) > kPivotTol) {
          col = j;
          break;
        }
      }
      if (col < cols_) {
        pivot(i, col);
        ++i;
      } else {
        tableau_.erase(tableau_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  std::size_t structural_;
  std::size_t cols_ = 0;
  std::size_t first_artificial_ = 0;
  std::vector<std::vector<double>> tableau_;
  std::vector<std::size_t> basis_;
  std::vector<double> cost_;
  std::vector<double> reduced_;
  double value_ = 0.0;
};

}  // namespace

LpSolution solve(const LinearProgram& lp) {
  validate(lp);
  const Standard s = standardize(lp);

  LpSolution out;
  if (s.trivially_infeasible) {
    out.status = LpStatus::Infeasible;
    return out;
  }

  Simplex simplex(s);
  out.status = simplex.run(s.obj, out.iterations);
  if (out.status != LpStatus::Optimal) return out;

  const std::vector<double> u = simplex.structural_values();
  const std::size_t n = lp.variable_count();
  out.variables.resize(n);
  double value = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double x = s.vars[j].shift + u[s.vars[j].pos];
    if (s.vars[j].neg >= 0) x -= u[s.vars[j].neg];
    out.variables[j] = x;
    value += lp.objective[j] * x;
  }
  out.objective_value = value;
  return out;
}

double max_constraint_violation(const LinearProgram& lp,
                                const std::vector<double>& x) {
  if (x.size() != lp.variable_count()) {
    throw InvalidInput("solution length does not match variable count");
  }
  double worst = 0.0;
  for (const Constraint& row : lp.constraints) {
    double dot = 0.0;
    double scale = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      dot += row.coefficients[j] * x[j];
      scale = std::max(scale, std::fabs(row.coefficients[j]));
    }
    if (scale == 0.0) scale = 1.0;
    double v = (dot - row.rhs) / scale;
    switch (row.relation) {
      case Relation::LessEqual: worst = std::max(worst, v); break;
      case Relation::GreaterEqual: worst = std::max(worst, -v); break;
      case Relation::Equal: worst = std::max(worst, std::fabs(v)); break;
    }
  }
  for (std::size_t j = 0; j < x.size(); ++j) {
    double lb = lp.lower_bound(j);
    if (lb != LinearProgram::kFreeVariable) {
      worst = std::max(worst, lb - x[j]);
    }
  }
  return worst;
}

}  // namespace deaic
