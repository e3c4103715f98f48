#include "random_programs.hpp"

#include <cstdint>
#include <vector>

namespace deaic::testing {

namespace {

int uniform_int(SplitMix64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng.next() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace

LinearProgram random_program(SplitMix64& rng, const RandomLpOptions& opt) {
  const int n = uniform_int(rng, 1, opt.max_vars);
  LinearProgram lp;
  lp.objective.resize(n);
  for (double& c : lp.objective) c = uniform_int(rng, -5, 5);

  int budget = opt.max_rows;
  if (opt.bounded) {
    lp.add_constraint(std::vector<double>(n, 1.0), Relation::LessEqual,
                      uniform_int(rng, 1, 20));
    --budget;
  }
  const int rows = uniform_int(rng, 0, budget);
  for (int i = 0; i < rows; ++i) {
    std::vector<double> a(n);
    for (double& v : a) v = 0.5 * uniform_int(rng, -8, 8);
    const int kind = uniform_int(rng, 0, 9);
    if (kind < 6) {
      lp.add_constraint(std::move(a), Relation::LessEqual,
                        uniform_int(rng, -6, 10));
    } else if (kind < 9) {
      lp.add_constraint(std::move(a), Relation::GreaterEqual,
                        uniform_int(rng, -6, 8));
    } else {
      lp.add_constraint(std::move(a), Relation::Equal, uniform_int(rng, 0, 6));
    }
  }

  if (opt.shifted_bounds && uniform_int(rng, 0, 3) == 0) {
    lp.lower_bounds.assign(n, 0.0);
    for (double& b : lp.lower_bounds) {
      b = 0.5 * uniform_int(rng, 0, 3);
    }
  }
  return lp;
}

}  // namespace deaic::testing
