#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "deaic/dea.hpp"
#include "deaic/inverse.hpp"
#include "deaic/io.hpp"
#include "deaic/stochastic.hpp"

namespace deaic {

/// Library version, also reported in every serialized output.
inline constexpr std::string_view kVersion = "0.1.0";

/// Provenance of the inputs behind a run, carried into the report verbatim.
struct RunMetadata {
  std::string dataset_source;
  std::string dataset_digest;
  std::string distributions_source;
  std::string distributions_digest;
};

/// Full cost-estimation run: efficiency and Monte Carlo per distribution
/// entry, in entry order. Adds data-driven notes: distributions whose std
/// deviates structurally from a quarter of the mean shift, producers whose
/// every sample left the cost undefined, and (when the inputs are exactly
/// the built-in study data) costs outside 20% of the published values.
Report build_estimate_report(const Dataset& dataset,
                             const std::vector<EnergyDistribution>& dists,
                             int samples, std::uint64_t seed,
                             const RunMetadata& meta);

struct WhatIfResult {
  double z = 1.0;
  double efficiency_index = 1.0;
  PerturbedInputs inputs;
  double beta = 0.0;
  std::optional<double> ic_rial_per_kwh;  // absent when e0 equals the base
};

/// Single output estimate at consumption e0_mwh with the point cost.
WhatIfResult what_if(const Dataset& dataset, std::size_t index, double e0_mwh);

/// Efficiency table for the whole dataset. Csv: `id,z,efficiency_index`.
std::string efficiency_report(const Dataset& dataset, const RunMetadata& meta,
                              ReportFormat format);

/// Single what-if estimate. Csv: `producer_id,e0_mwh,beta,ic_rial_per_kwh`
/// with `n/a` when the cost is undefined (json writes null).
std::string what_if_report(const Dataset& dataset, std::size_t index,
                           double e0_mwh, const RunMetadata& meta,
                           ReportFormat format);

}  // namespace deaic
