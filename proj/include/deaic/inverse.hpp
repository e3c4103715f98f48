#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "deaic/dea.hpp"
#include "deaic/lp.hpp"

namespace deaic {

/// Inputs of a producer after an electricity increase. Labor moves
/// proportionally with electricity; raw materials stay at the base level.
struct PerturbedInputs {
  double electricity_mwh = 0.0;
  double labor_hours = 0.0;
  double raw_materials = 0.0;
};

struct OutputEstimate {
  double beta = 0.0;           // estimated sales value, 1e10 Rial
  std::vector<double> lambda;  // peer weights at the optimum
};

/// Scales the producer's inputs to a new electricity level:
/// labor_hours * (e_new / base electricity), raw materials unchanged.
/// e_new below the base consumption is a DomainError.
PerturbedInputs perturbed_inputs(const Producer& producer, double e_new_mwh);

/// Output-estimation program over variables (sv, lambda_1..lambda_n):
/// maximize sv such that a peer mix fits inside the perturbed inputs and
/// delivers at least z0 * sv; sv >= the base sales value.
LinearProgram build_estimate_lp(const Dataset& dataset, std::size_t index,
                                const PerturbedInputs& inputs, double z0);

/// Maximal sales value consistent with the perturbed inputs when the
/// producer's efficiency (via its expansion factor z0) is held fixed.
/// z0 must come from the producer's own efficiency solve; with such a z0
/// the program is always feasible, so failures surface as InternalError.
OutputEstimate estimate_output(const Dataset& dataset, std::size_t index,
                               const PerturbedInputs& inputs, double z0);

/// Pointwise (electricity, estimated sales) curve for plotting; order of
/// e_values preserved.
std::vector<std::pair<double, double>> value_curve(
    const Dataset& dataset, std::size_t index,
    const std::vector<double>& e_values);

}  // namespace deaic
