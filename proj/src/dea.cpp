#include "deaic/dea.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "deaic/errors.hpp"

namespace deaic {

namespace {

void validate_producer(const Producer& p) {
  auto fail = [&](const std::string& why) {
    throw InvalidInput("producer '" + p.id + "': " + why);
  };
  if (p.id.empty()) throw InvalidInput("producer with empty id");
  for (double v : {p.electricity_mwh, p.raw_materials, p.labor_hours,
                   p.sales_value}) {
    if (!std::isfinite(v)) fail("non-finite value");
  }
  if (p.sales_value <= 0.0) fail("sales_value must be positive");
  if (p.electricity_mwh < 0.0 || p.raw_materials < 0.0 || p.labor_hours < 0.0) {
    fail("inputs must be non-negative");
  }
  if (p.electricity_mwh == 0.0 && p.raw_materials == 0.0 &&
      p.labor_hours == 0.0) {
    fail("at least one input must be positive");
  }
}

std::string describe(const LinearProgram& lp) {
  std::ostringstream os;
  os << lp.variable_count() << " variables, " << lp.constraints.size()
     << " rows;";
  for (const Constraint& c : lp.constraints) {
    os << " [";
    for (std::size_t j = 0; j < c.coefficients.size(); ++j) {
      if (j) os << ' ';
      os << c.coefficients[j];
    }
    os << (c.relation == Relation::LessEqual
               ? " <= "
               : c.relation == Relation::GreaterEqual ? " >= " : " == ")
       << c.rhs << ']';
  }
  return os.str();
}

}  // namespace

Dataset::Dataset(std::vector<Producer> producers)
    : producers_(std::move(producers)) {
  if (producers_.empty()) throw InvalidInput("dataset has no producers");
  for (std::size_t i = 0; i < producers_.size(); ++i) {
    validate_producer(producers_[i]);
    for (std::size_t j = i + 1; j < producers_.size(); ++j) {
      if (producers_[i].id == producers_[j].id) {
        throw InvalidInput("duplicate producer id '" + producers_[i].id + "'");
      }
    }
  }
}

const Producer& Dataset::at(std::size_t index) const {
  if (index >= producers_.size()) {
    throw InvalidInput("producer index " + std::to_string(index) +
                       " out of range");
  }
  return producers_[index];
}

std::optional<std::size_t> Dataset::find(std::string_view id) const {
  for (std::size_t i = 0; i < producers_.size(); ++i) {
    if (producers_[i].id == id) return i;
  }
  return std::nullopt;
}

LinearProgram build_ccr_lp(const Dataset& dataset, std::size_t index) {
  const Producer& target = dataset.at(index);
  const std::size_t n = dataset.size();

  LinearProgram lp;
  lp.objective.assign(n + 1, 0.0);
  lp.objective[0] = 1.0;  // variable 0 is z, the rest are peer weights
  lp.lower_bounds.assign(n + 1, 0.0);
  lp.lower_bounds[0] = 1.0;

  auto input_of = [](const Producer& p, int which) {
    return which == 0 ? p.electricity_mwh
                      : which == 1 ? p.raw_materials : p.labor_hours;
  };
  for (int which = 0; which < 3; ++which) {
    std::vector<double> row(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      row[i + 1] = input_of(dataset.producers()[i], which);
    }
    lp.add_constraint(std::move(row), Relation::LessEqual,
                      input_of(target, which));
  }
  // peer sales must cover z times the target's sales
  std::vector<double> out(n + 1, 0.0);
  out[0] = -target.sales_value;
  for (std::size_t i = 0; i < n; ++i) {
    out[i + 1] = dataset.producers()[i].sales_value;
  }
  lp.add_constraint(std::move(out), Relation::GreaterEqual, 0.0);
  return lp;
}

EfficiencyResult efficiency(const Dataset& dataset, std::size_t index) {
  const LinearProgram lp = build_ccr_lp(dataset, index);
  const LpSolution sol = solve(lp);
  if (sol.status != LpStatus::Optimal) {
    throw InternalError(
        "efficiency program for '" + dataset.at(index).id + "' came back " +
        (sol.status == LpStatus::Infeasible ? "infeasible" : "unbounded") +
        "; program: " + describe(lp));
  }
  EfficiencyResult out;
  out.producer_id = dataset.at(index).id;
  out.z = std::max(1.0, sol.objective_value);
  out.efficiency_index = 1.0 / out.z;
  out.lambda.assign(sol.variables.begin() + 1, sol.variables.end());
  return out;
}

std::vector<EfficiencyResult> efficiency_all(const Dataset& dataset) {
  std::vector<EfficiencyResult> out;
  out.reserve(dataset.size());
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    out.push_back(efficiency(dataset, i));
  }
  return out;
}

}  // namespace deaic
