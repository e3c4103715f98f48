#include "deaic/pipeline.hpp"

#include <algorithm>
#include <cmath>

#include "deaic/errors.hpp"
#include "deaic/reference.hpp"

namespace deaic {
namespace {

// A tabulated std is treated as inconsistent with the construction rule
// (std = quarter of the mean shift) only when the gap exceeds 10% of the
// larger side; smaller gaps are indistinguishable from table rounding.
std::optional<std::string> deviation_note(const EnergyDistribution& d) {
  const double shift = d.mean_mwh - d.base_mwh;
  const double four_sigma = 4.0 * d.std_mwh;
  if (shift <= 0.0 && d.std_mwh == 0.0) return std::nullopt;
  const double gap = std::fabs(four_sigma - shift);
  if (gap <= 0.1 * std::max(four_sigma, shift)) return std::nullopt;
  return "std_mwh " + format_sig9(d.std_mwh) +
         " is inconsistent with (mean_mwh - base_mwh)/4 = " +
         format_sig9(shift / 4.0);
}

bool is_builtin_study(const Dataset& dataset,
                      const std::vector<EnergyDistribution>& dists) {
  return write_producers(dataset) == reference::producers_csv() &&
         write_distributions(dists) == reference::distributions_csv();
}

}  // namespace

Report build_estimate_report(const Dataset& dataset,
                             const std::vector<EnergyDistribution>& dists,
                             int samples, std::uint64_t seed,
                             const RunMetadata& meta) {
  Report report;
  report.tool_version = std::string(kVersion);
  report.seed = seed;
  report.samples_requested = samples;
  report.dataset_source = meta.dataset_source;
  report.dataset_digest = meta.dataset_digest;
  report.distributions_source = meta.distributions_source;
  report.distributions_digest = meta.distributions_digest;

  const bool builtin_study = is_builtin_study(dataset, dists);
  if (builtin_study) {
    report.notes.push_back(
        "inputs match the built-in study data; costs are checked against the "
        "published values");
  }

  for (std::size_t k = 0; k < dists.size(); ++k) {
    const EnergyDistribution& dist = dists[k];
    auto index = dataset.find(dist.producer_id);
    if (!index) {
      throw InvalidInput("distribution for unknown producer '" +
                         dist.producer_id + "'");
    }
    EfficiencyResult eff = efficiency(dataset, *index);
    InterruptionCostEstimate mc =
        monte_carlo_estimate(dataset, *index, dist, samples, seed);

    ProducerReport p;
    p.producer_id = dist.producer_id;
    p.z = eff.z;
    p.efficiency_index = eff.efficiency_index;
    p.mean_mwh = dist.mean_mwh;
    p.std_mwh = dist.std_mwh;
    p.base_mwh = dist.base_mwh;
    p.mean_ic = mc.mean_ic;
    p.std_ic = mc.std_ic;
    p.n_requested = mc.n_requested;
    p.n_used = mc.n_used;
    p.samples = std::move(mc.samples);

    std::vector<std::string> notes;
    if (auto note = deviation_note(dist)) notes.push_back(*note);
    if (p.n_used == 0) {
      notes.push_back(
          "no usable samples: every draw left the interruption cost undefined");
    }
    if (builtin_study && k < reference::published_costs_rial_per_kwh().size()) {
      const double published = reference::published_costs_rial_per_kwh()[k];
      if (std::fabs(p.mean_ic - published) > 0.20 * published) {
        notes.push_back("mean cost " + format_sig9(p.mean_ic) +
                        " Rial/kWh is outside 20% of the published value " +
                        format_sig9(published));
      }
    }
    for (std::size_t i = 0; i < notes.size(); ++i) {
      if (i) p.note += "; ";
      p.note += notes[i];
    }

    report.producers.push_back(std::move(p));
  }
  return report;
}

WhatIfResult what_if(const Dataset& dataset, std::size_t index, double e0_mwh) {
  const Producer& producer = dataset.at(index);
  EfficiencyResult eff = efficiency(dataset, index);
  WhatIfResult result;
  result.z = eff.z;
  result.efficiency_index = eff.efficiency_index;
  result.inputs = perturbed_inputs(producer, e0_mwh);
  result.beta = estimate_output(dataset, index, result.inputs, eff.z).beta;
  result.ic_rial_per_kwh = interruption_cost(result.beta, producer.sales_value,
                                             e0_mwh, producer.electricity_mwh);
  return result;
}

namespace {

void append_source_block(std::string& out, const RunMetadata& meta) {
  out += "  \"dataset\": {\n";
  out += "    \"source\": " + json_quote(meta.dataset_source) + ",\n";
  out += "    \"digest\": " + json_quote(meta.dataset_digest) + "\n";
  out += "  },\n";
}

}  // namespace

std::string efficiency_report(const Dataset& dataset, const RunMetadata& meta,
                              ReportFormat format) {
  std::vector<EfficiencyResult> results = efficiency_all(dataset);
  if (format == ReportFormat::Csv) {
    std::string out = "id,z,efficiency_index\n";
    for (const EfficiencyResult& r : results) {
      out += r.producer_id + ',' + format_sig9(r.z) + ',' +
             format_sig9(r.efficiency_index) + '\n';
    }
    return out;
  }
  std::string out = "{\n";
  out += "  \"tool_version\": \"" + std::string(kVersion) + "\",\n";
  append_source_block(out, meta);
  out += "  \"producers\": [";
  for (std::size_t i = 0; i < results.size(); ++i) {
    const EfficiencyResult& r = results[i];
    out += i ? ",\n    " : "\n    ";
    out += "{\"id\": " + json_quote(r.producer_id) + ", \"z\": " + format_sig9(r.z) +
           ", \"efficiency_index\": " + format_sig9(r.efficiency_index) + "}";
  }
  out += results.empty() ? "]\n" : "\n  ]\n";
  out += "}\n";
  return out;
}

std::string what_if_report(const Dataset& dataset, std::size_t index,
                           double e0_mwh, const RunMetadata& meta,
                           ReportFormat format) {
  const WhatIfResult r = what_if(dataset, index, e0_mwh);
  const Producer& producer = dataset.at(index);
  if (format == ReportFormat::Csv) {
    std::string out = "producer_id,e0_mwh,beta,ic_rial_per_kwh\n";
    out += producer.id + ',' + format_sig9(e0_mwh) + ',' + format_sig9(r.beta) +
           ',' +
           (r.ic_rial_per_kwh ? format_sig9(*r.ic_rial_per_kwh)
                              : std::string("n/a")) +
           '\n';
    return out;
  }
  std::string out = "{\n";
  out += "  \"tool_version\": \"" + std::string(kVersion) + "\",\n";
  append_source_block(out, meta);
  out += "  \"producer_id\": " + json_quote(producer.id) + ",\n";
  out += "  \"base_mwh\": " + format_sig9(producer.electricity_mwh) + ",\n";
  out += "  \"e0_mwh\": " + format_sig9(e0_mwh) + ",\n";
  out += "  \"labor_hours_scaled\": " + format_sig9(r.inputs.labor_hours) + ",\n";
  out += "  \"z\": " + format_sig9(r.z) + ",\n";
  out += "  \"efficiency_index\": " + format_sig9(r.efficiency_index) + ",\n";
  out += "  \"beta\": " + format_sig9(r.beta) + ",\n";
  out += "  \"ic_rial_per_kwh\": " +
         (r.ic_rial_per_kwh ? format_sig9(*r.ic_rial_per_kwh)
                            : std::string("null")) +
         "\n";
  out += "}\n";
  return out;
}

}  // namespace deaic
