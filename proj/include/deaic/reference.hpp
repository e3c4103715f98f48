#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "deaic/dea.hpp"
#include "deaic/stochastic.hpp"

namespace deaic::reference {

// Built-in eight-producer study data: annual electricity, raw materials,
// labor and sales per producer, plus the published uninterrupted-energy
// distributions and the result values the original study reports for them.
// The csv texts are the canonical on-disk form of the same data.

std::string_view producers_csv();
std::string_view distributions_csv();

Dataset dataset();
std::vector<EnergyDistribution> distributions();

/// Published efficiency indices for P1..P8 (comparison targets, not inputs).
const std::array<double, 8>& published_efficiency_indices();

/// Published mean interruption costs for P1..P8 in Rial/kWh.
const std::array<double, 8>& published_costs_rial_per_kwh();

}  // namespace deaic::reference
