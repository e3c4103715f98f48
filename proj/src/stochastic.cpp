#include "deaic/stochastic.hpp"

#include <cmath>
#include <string>

#include "deaic/errors.hpp"
#include "deaic/inverse.hpp"

namespace deaic {

double average_power(double e_total_mwh, double work_hours) {
  if (!(work_hours > 0.0)) {
    throw InvalidInput("work hours must be positive");
  }
  return e_total_mwh / work_hours;
}

EnergyDistribution energy_distribution(const std::string& producer_id,
                                       double e_total_mwh,
                                       const std::vector<OutageRecord>& outages,
                                       double default_demand_mw) {
  if (!(default_demand_mw > 0.0)) {
    throw InvalidInput("default demand must be positive");
  }
  double unserved = 0.0;
  for (const OutageRecord& rec : outages) {
    if (rec.producer_id != producer_id) {
      throw InvalidInput("outage record for '" + rec.producer_id +
                         "' mixed into the records of '" + producer_id + "'");
    }
    if (!(rec.duration_h > 0.0)) {
      throw InvalidInput("outage duration must be positive");
    }
    const double demand = rec.demand_mw.value_or(default_demand_mw);
    if (!(demand > 0.0)) throw InvalidInput("outage demand must be positive");
    unserved += rec.duration_h * demand;
  }
  EnergyDistribution dist;
  dist.producer_id = producer_id;
  dist.base_mwh = e_total_mwh;
  dist.mean_mwh = e_total_mwh + unserved;
  dist.std_mwh = kStdFraction * unserved;
  return dist;
}

std::vector<EnergyDistribution> distributions_from_outages(
    const Dataset& dataset, const std::vector<OutageRecord>& outages,
    double work_hours) {
  if (!std::isfinite(work_hours) || work_hours <= 0.0) {
    throw InvalidInput("work hours must be positive");
  }
  for (const OutageRecord& rec : outages) {
    if (!dataset.find(rec.producer_id)) {
      throw InvalidInput("outage record for unknown producer '" +
                         rec.producer_id + "'");
    }
  }
  std::vector<EnergyDistribution> dists;
  dists.reserve(dataset.size());
  for (const Producer& p : dataset.producers()) {
    std::vector<OutageRecord> own;
    for (const OutageRecord& rec : outages) {
      if (rec.producer_id == p.id) own.push_back(rec);
    }
    if (own.empty()) {
      dists.push_back({p.id, p.electricity_mwh, 0.0, p.electricity_mwh});
      continue;
    }
    bool needs_default = false;
    for (const OutageRecord& rec : own) {
      if (!rec.demand_mw) needs_default = true;
    }
    // The placeholder demand is never read when every record carries its own.
    const double demand =
        needs_default ? average_power(p.electricity_mwh, work_hours) : 1.0;
    dists.push_back(energy_distribution(p.id, p.electricity_mwh, own, demand));
  }
  return dists;
}

double sample_energy(const EnergyDistribution& dist, SplitMix64& rng) {
  if (dist.std_mwh == 0.0) {
    if (dist.mean_mwh < dist.base_mwh) {
      throw DomainError("degenerate distribution for '" + dist.producer_id +
                        "' sits below the base consumption");
    }
    return dist.mean_mwh;
  }
  for (int attempt = 0; attempt < 1000000; ++attempt) {
    const double e = dist.mean_mwh + dist.std_mwh * rng.next_normal();
    if (e >= dist.base_mwh) return e;
  }
  throw InternalError("energy sampling for '" + dist.producer_id +
                      "' rejected every draw");
}

std::optional<double> interruption_cost(double beta, double sv_base,
                                        double e0_mwh, double e_base_mwh) {
  const double delta_e = e0_mwh - e_base_mwh;
  if (delta_e < denominator_guard(e_base_mwh)) return std::nullopt;
  // sales are in 1e10 Rial and energy in MWh; Rial/kWh needs 1e10 / 1e3
  return (beta - sv_base) / delta_e * 1e7;
}

InterruptionCostEstimate monte_carlo_estimate(const Dataset& dataset,
                                              std::size_t index,
                                              const EnergyDistribution& dist,
                                              int n, std::uint64_t seed) {
  const Producer& target = dataset.at(index);
  if (n < 1) throw InvalidInput("sample count must be at least 1");
  const double scale =
      std::fabs(target.electricity_mwh) > 1.0 ? std::fabs(target.electricity_mwh) : 1.0;
  if (std::fabs(dist.base_mwh - target.electricity_mwh) > 1e-9 * scale) {
    throw InvalidInput("distribution base for '" + dist.producer_id +
                       "' does not match the producer's consumption");
  }

  const double z0 = efficiency(dataset, index).z;

  InterruptionCostEstimate out;
  out.producer_id = target.id;
  out.seed = seed;
  out.n_requested = n;
  out.samples.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    SplitMix64 rng = substream(seed, static_cast<std::uint64_t>(i));
    try {
      const double e0 = sample_energy(dist, rng);
      const PerturbedInputs inputs = perturbed_inputs(target, e0);
      const OutputEstimate est = estimate_output(dataset, index, inputs, z0);
      const auto ic = interruption_cost(est.beta, target.sales_value, e0,
                                        target.electricity_mwh);
      if (!ic) continue;  // counted via n_used below
      out.samples.push_back({i, e0, est.beta, *ic});
    } catch (const InternalError& err) {
      throw InternalError("sample " + std::to_string(i) + ": " + err.what());
    }
  }
  out.n_used = static_cast<int>(out.samples.size());

  if (out.n_used > 0) {
    double sum = 0.0;
    for (const CostSample& s : out.samples) sum += s.ic_rial_per_kwh;
    out.mean_ic = sum / out.n_used;
    if (out.n_used > 1) {
      double ss = 0.0;
      for (const CostSample& s : out.samples) {
        const double d = s.ic_rial_per_kwh - out.mean_ic;
        ss += d * d;
      }
      out.std_ic = std::sqrt(ss / (out.n_used - 1));
    }
  }
  return out;
}

}  // namespace deaic
