#include "deaic/inverse.hpp"

#include <cmath>
#include <string>

#include "deaic/errors.hpp"

namespace deaic {

PerturbedInputs perturbed_inputs(const Producer& producer, double e_new_mwh) {
  if (!std::isfinite(e_new_mwh)) {
    throw InvalidInput("non-finite electricity level");
  }
  if (e_new_mwh < producer.electricity_mwh) {
    throw DomainError("electricity level " + std::to_string(e_new_mwh) +
                      " below base consumption " +
                      std::to_string(producer.electricity_mwh) + " for '" +
                      producer.id + "'");
  }
  PerturbedInputs out;
  out.electricity_mwh = e_new_mwh;
  out.raw_materials = producer.raw_materials;
  if (producer.electricity_mwh == 0.0) {
    if (e_new_mwh > 0.0) {
      throw DomainError("cannot scale labor for '" + producer.id +
                        "': base electricity is zero");
    }
    out.labor_hours = producer.labor_hours;
  } else {
    out.labor_hours =
        producer.labor_hours * (e_new_mwh / producer.electricity_mwh);
  }
  return out;
}

LinearProgram build_estimate_lp(const Dataset& dataset, std::size_t index,
                                const PerturbedInputs& inputs, double z0) {
  const Producer& target = dataset.at(index);
  const std::size_t n = dataset.size();

  LinearProgram lp;
  lp.objective.assign(n + 1, 0.0);
  lp.objective[0] = 1.0;  // variable 0 is the sales value, the rest weights
  lp.lower_bounds.assign(n + 1, 0.0);
  lp.lower_bounds[0] = target.sales_value;

  struct RowSpec {
    double (*value)(const Producer&);
    double limit;
  };
  const RowSpec rows[] = {
      {[](const Producer& p) { return p.electricity_mwh; },
       inputs.electricity_mwh},
      {[](const Producer& p) { return p.labor_hours; }, inputs.labor_hours},
      {[](const Producer& p) { return p.raw_materials; },
       inputs.raw_materials},
  };
  for (const RowSpec& spec : rows) {
    std::vector<double> row(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      row[i + 1] = spec.value(dataset.producers()[i]);
    }
    lp.add_constraint(std::move(row), Relation::LessEqual, spec.limit);
  }
  std::vector<double> out(n + 1, 0.0);
  out[0] = -z0;
  for (std::size_t i = 0; i < n; ++i) {
    out[i + 1] = dataset.producers()[i].sales_value;
  }
  lp.add_constraint(std::move(out), Relation::GreaterEqual, 0.0);
  return lp;
}

OutputEstimate estimate_output(const Dataset& dataset, std::size_t index,
                               const PerturbedInputs& inputs, double z0) {
  const Producer& target = dataset.at(index);
  if (!std::isfinite(z0) || z0 < 1.0) {
    throw InvalidInput("expansion factor z0 must be finite and >= 1");
  }
  const double tol = 1e-9;
  if (inputs.electricity_mwh < target.electricity_mwh * (1.0 - tol) - tol ||
      inputs.labor_hours < target.labor_hours * (1.0 - tol) - tol ||
      inputs.raw_materials < target.raw_materials * (1.0 - tol) - tol) {
    throw DomainError("perturbed inputs for '" + target.id +
                      "' fall below the base inputs");
  }

  const LinearProgram lp = build_estimate_lp(dataset, index, inputs, z0);
  const LpSolution sol = solve(lp);
  if (sol.status == LpStatus::Infeasible) {
    throw InternalError("output estimate for '" + target.id +
                        "' is infeasible although z0 came from a feasible "
                        "efficiency solve");
  }
  if (sol.status == LpStatus::Unbounded) {
    throw DomainError("output estimate for '" + target.id +
                      "' is unbounded; the dataset admits a costless "
                      "dominating mix");
  }
  OutputEstimate out;
  out.beta = sol.variables[0];
  out.lambda.assign(sol.variables.begin() + 1, sol.variables.end());
  return out;
}

std::vector<std::pair<double, double>> value_curve(
    const Dataset& dataset, std::size_t index,
    const std::vector<double>& e_values) {
  const double z0 = efficiency(dataset, index).z;
  std::vector<std::pair<double, double>> out;
  out.reserve(e_values.size());
  for (double e : e_values) {
    const PerturbedInputs inputs =
        perturbed_inputs(dataset.at(index), e);
    out.emplace_back(e, estimate_output(dataset, index, inputs, z0).beta);
  }
  return out;
}

}  // namespace deaic
