#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "deaic/dea.hpp"
#include "deaic/stochastic.hpp"

namespace deaic {

// ---------------------------------------------------------------------------
// CSV ingestion. All files are UTF-8 with a mandatory header row; LF and
// CRLF both accepted, '.' is the only decimal separator. Errors carry the
// offending line number.

/// Header: id,electricity_mwh,raw_materials_e10_rial,labor_hours_e6,sales_e10_rial
Dataset parse_producers(std::string_view text);

/// Header: producer_id,duration_h,demand_mw  (demand may be blank)
std::vector<OutageRecord> parse_outages(std::string_view text);

/// Header: producer_id,mean_mwh,std_mwh. The base consumption is joined
/// from the dataset by producer id; unknown ids are errors.
std::vector<EnergyDistribution> parse_distributions(std::string_view text,
                                                    const Dataset& dataset);

/// Canonical writers (LF, shortest round-trip numbers); parse(write(x))
/// reproduces x exactly.
std::string write_producers(const Dataset& dataset);
std::string write_distributions(const std::vector<EnergyDistribution>& dists);

// ---------------------------------------------------------------------------
// Report emission.

struct ProducerReport {
  std::string producer_id;
  double efficiency_index = 1.0;
  double z = 1.0;
  double mean_mwh = 0.0;  // distribution used for the run
  double std_mwh = 0.0;
  double base_mwh = 0.0;
  double mean_ic = 0.0;
  double std_ic = 0.0;
  int n_requested = 0;
  int n_used = 0;
  std::vector<CostSample> samples;
  std::string note;  // discrepancy note; empty when clean
};

struct Report {
  std::string tool_version;
  std::uint64_t seed = 0;
  int samples_requested = 0;
  std::string dataset_source;  // path or "builtin"
  std::string dataset_digest;
  std::string distributions_source;
  std::string distributions_digest;
  std::vector<std::string> notes;  // run-level notes
  std::vector<ProducerReport> producers;
};

enum class ReportFormat { Json, Csv };

/// Deterministic serialization: stable key order, LF line endings, numbers
/// printed with 9 significant digits. Json embeds the per-producer sample
/// series; Csv emits the bare series, one row per sample:
/// producer_id,sample_index,e0_mwh,beta,ic_rial_per_kwh
std::string write_report(const Report& report, ReportFormat format);

// ---------------------------------------------------------------------------
// Helpers shared with the CLI.

/// 64-bit FNV-1a digest of raw bytes, "fnv1a64:" + 16 hex digits.
std::string fnv1a64_hex(std::string_view bytes);

/// Number with 9 significant digits (report convention).
std::string format_sig9(double value);

/// Shortest representation that parses back to the same double.
std::string format_exact(double value);

/// Quoted and escaped JSON string literal for arbitrary UTF-8 text.
std::string json_quote(std::string_view text);

}  // namespace deaic
