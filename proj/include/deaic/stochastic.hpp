#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "deaic/dea.hpp"
#include "deaic/rng.hpp"

namespace deaic {

/// One power interruption: how long it lasted and, when known, the demand
/// that was being served when it started.
struct OutageRecord {
  std::string producer_id;
  double duration_h = 0.0;
  std::optional<double> demand_mw;
};

/// Normal model of the electricity a producer would have consumed without
/// interruptions. base_mwh is the actual (interrupted) consumption.
struct EnergyDistribution {
  std::string producer_id;
  double mean_mwh = 0.0;
  double std_mwh = 0.0;
  double base_mwh = 0.0;
};

struct CostSample {
  int index = 0;  // draw index within the run; skipped draws leave gaps
  double e0_mwh = 0.0;
  double beta = 0.0;
  double ic_rial_per_kwh = 0.0;
};

struct InterruptionCostEstimate {
  std::string producer_id;
  std::vector<CostSample> samples;  // used samples only
  double mean_ic = 0.0;             // Rial/kWh
  double std_ic = 0.0;              // sample standard deviation (n-1)
  std::uint64_t seed = 0;
  int n_requested = 0;
  int n_used = 0;
};

/// Energy divided by working time: the average power used as the demand
/// estimate when outage records do not carry one.
double average_power(double e_total_mwh, double work_hours);

/// Builds the uninterrupted-energy distribution from outage records:
/// mean = base + sum(duration * demand), standard deviation a fixed
/// quarter of that unserved-energy sum. Records missing a demand use
/// default_demand_mw.
EnergyDistribution energy_distribution(const std::string& producer_id,
                                       double e_total_mwh,
                                       const std::vector<OutageRecord>& outages,
                                       double default_demand_mw);

/// Ratio of the deviation sum fixed by the distribution construction.
inline constexpr double kStdFraction = 0.25;

/// One distribution per dataset producer, in dataset order, from the
/// producer's outage records. Producers without records get (base, 0).
/// Records whose demand is absent use the producer's average power over
/// work_hours. Outage ids not present in the dataset are rejected.
std::vector<EnergyDistribution> distributions_from_outages(
    const Dataset& dataset, const std::vector<OutageRecord>& outages,
    double work_hours);

/// One draw from the distribution, redrawn until it is at least the base
/// consumption (the model only admits increases). Deterministic for a
/// given generator state.
double sample_energy(const EnergyDistribution& dist, SplitMix64& rng);

/// Denominator guard below which a sample is skipped rather than divided.
inline double denominator_guard(double e_base_mwh) {
  return 1e-9 * (e_base_mwh > 1.0 ? e_base_mwh : 1.0);
}

/// Interruption cost in Rial/kWh: sales gain (1e10 Rial) over energy gain
/// (MWh) times 1e7. Returns nullopt when the energy gain is under the
/// guard, signalling "skip this sample".
std::optional<double> interruption_cost(double beta, double sv_base,
                                        double e0_mwh, double e_base_mwh);

/// Seeded Monte Carlo estimate: draws n energy samples, solves the
/// output-estimation program for each (z0 computed once), and aggregates
/// the per-sample costs. Fully determined by (dataset, index, dist, n,
/// seed); sample i uses substream(seed, i), so evaluation order cannot
/// change the result.
InterruptionCostEstimate monte_carlo_estimate(const Dataset& dataset,
                                              std::size_t index,
                                              const EnergyDistribution& dist,
                                              int n, std::uint64_t seed);

}  // namespace deaic
