#include "vertex_oracle.hpp"

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace deaic::testing {

namespace {

constexpr double kFeasTol = 1e-7;
constexpr double kSingularTol = 1e-9;
constexpr double kRayTol = 1e-9;

struct Plane {
  std::vector<double> a;
  double b;
};

// Gaussian elimination with partial pivoting on row-scaled data.
std::optional<std::vector<double>> solve_square(
    std::vector<std::vector<double>> m, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t i = 0; i < n; ++i) {
    double scale = 0.0;
    for (double v : m[i]) scale = std::max(scale, std::fabs(v));
    if (scale == 0.0) return std::nullopt;
    for (double& v : m[i]) v /= scale;
    b[i] /= scale;
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::fabs(m[i][k]) > std::fabs(m[piv][k])) piv = i;
    }
    if (std::fabs(m[piv][k]) < kSingularTol) return std::nullopt;
    std::swap(m[k], m[piv]);
    std::swap(b[k], b[piv]);
    for (std::size_t i = k + 1; i < n; ++i) {
      double f = m[i][k] / m[k][k];
      if (f == 0.0) continue;
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
      b[i] -= f * b[k];
    }
  }
  std::vector<double> x(n);
  for (std::size_t k = n; k-- > 0;) {
    double v = b[k];
    for (std::size_t j = k + 1; j < n; ++j) v -= m[k][j] * x[j];
    x[k] = v / m[k][k];
  }
  return x;
}

bool row_satisfied(const std::vector<double>& a, Relation rel, double b,
                   const std::vector<double>& x) {
  double dot = 0.0;
  double scale = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    dot += a[j] * x[j];
    scale = std::max(scale, std::fabs(a[j]));
  }
  if (scale == 0.0) scale = 1.0;
  double v = (dot - b) / scale;
  switch (rel) {
    case Relation::LessEqual: return v <= kFeasTol;
    case Relation::GreaterEqual: return v >= -kFeasTol;
    case Relation::Equal: return std::fabs(v) <= kFeasTol;
  }
  return false;
}

// Visits the solution of every n-subset of planes that is nonsingular.
template <typename Visit>
void for_each_intersection(const std::vector<Plane>& planes, std::size_t n,
                           Visit visit) {
  if (planes.size() < n) return;
  std::vector<std::size_t> pick(n);
  for (std::size_t i = 0; i < n; ++i) pick[i] = i;
  while (true) {
    std::vector<std::vector<double>> m;
    std::vector<double> b;
    m.reserve(n);
    b.reserve(n);
    for (std::size_t idx : pick) {
      m.push_back(planes[idx].a);
      b.push_back(planes[idx].b);
    }
    if (auto x = solve_square(std::move(m), std::move(b))) visit(*x);

    // next combination
    bool advanced = false;
    for (std::size_t i = n; i-- > 0;) {
      if (pick[i] != planes.size() - n + i) {
        ++pick[i];
        for (std::size_t j = i + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) return;
  }
}

}  // namespace

OracleResult enumerate_solve(const LinearProgram& lp) {
  const std::size_t n = lp.variable_count();
  for (std::size_t j = 0; j < n; ++j) {
    if (lp.lower_bound(j) == LinearProgram::kFreeVariable) {
      throw std::logic_error("vertex oracle requires lower-bounded variables");
    }
  }

  std::vector<Plane> planes;
  for (const Constraint& row : lp.constraints) {
    planes.push_back({row.coefficients, row.rhs});
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> e(n, 0.0);
    e[j] = 1.0;
    planes.push_back({std::move(e), lp.lower_bound(j)});
  }

  auto feasible = [&](const std::vector<double>& x) {
    for (const Constraint& row : lp.constraints) {
      if (!row_satisfied(row.coefficients, row.relation, row.rhs, x)) {
        return false;
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (x[j] < lp.lower_bound(j) - kFeasTol) return false;
    }
    return true;
  };

  OracleResult out;
  bool found = false;
  for_each_intersection(planes, n, [&](const std::vector<double>& x) {
    if (!feasible(x)) return;
    double value = 0.0;
    for (std::size_t j = 0; j < n; ++j) value += lp.objective[j] * x[j];
    if (!found || value > out.objective_value) {
      out.objective_value = value;
      out.best_vertex = x;
    }
    found = true;
  });
  if (!found) {
    out.status = LpStatus::Infeasible;
    return out;
  }

  // Recession-cone scan: an improving direction d with A d on the feasible
  // side of zero, d >= 0, sum(d) = 1 proves the program unbounded. The
  // normalized cone is a polytope, so enumerating its vertices suffices.
  std::vector<Plane> ray_planes;
  std::vector<Constraint> ray_rows;
  for (const Constraint& row : lp.constraints) {
    ray_planes.push_back({row.coefficients, 0.0});
    ray_rows.push_back({row.coefficients, row.relation, 0.0});
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> e(n, 0.0);
    e[j] = 1.0;
    ray_planes.push_back({std::move(e), 0.0});
  }
  ray_planes.push_back({std::vector<double>(n, 1.0), 1.0});
  ray_rows.push_back({std::vector<double>(n, 1.0), Relation::Equal, 1.0});

  double obj_scale = 1.0;
  for (double c : lp.objective) obj_scale = std::max(obj_scale, std::fabs(c));
  bool unbounded = false;
  for_each_intersection(ray_planes, n, [&](const std::vector<double>& d) {
    if (unbounded) return;
    for (const Constraint& row : ray_rows) {
      if (!row_satisfied(row.coefficients, row.relation, row.rhs, d)) return;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (d[j] < -kFeasTol) return;
    }
    double gain = 0.0;
    for (std::size_t j = 0; j < n; ++j) gain += lp.objective[j] * d[j];
    if (gain > kRayTol * obj_scale) unbounded = true;
  });
  out.status = unbounded ? LpStatus::Unbounded : LpStatus::Optimal;
  return out;
}

}  // namespace deaic::testing
