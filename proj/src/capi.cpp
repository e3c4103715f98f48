#include "deaic.h"

#include <cstring>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "deaic/dea.hpp"
#include "deaic/errors.hpp"
#include "deaic/io.hpp"
#include "deaic/pipeline.hpp"
#include "deaic/reference.hpp"
#include "deaic/stochastic.hpp"

struct deaic_dataset {
  deaic::Dataset impl;
};

struct deaic_distributions {
  std::vector<deaic::EnergyDistribution> impl;
};

struct deaic_report {
  deaic::Report impl;
};

namespace {

thread_local std::string t_last_error;

void set_error(const char* message) noexcept {
  try {
    t_last_error = message;
  } catch (...) {
    // Leave the previous message in place if even storing fails.
  }
}

// Runs f, translating exceptions to status codes. f does the argument
// checks itself by throwing the matching exception type.
template <typename F>
deaic_status guarded(F&& f) noexcept {
  try {
    f();
    return DEAIC_OK;
  } catch (const deaic::InvalidInput& e) {
    set_error(e.what());
    return DEAIC_ERROR_INVALID_INPUT;
  } catch (const deaic::DomainError& e) {
    set_error(e.what());
    return DEAIC_ERROR_DOMAIN;
  } catch (const deaic::InternalError& e) {
    set_error(e.what());
    return DEAIC_ERROR_INTERNAL;
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return DEAIC_ERROR_INTERNAL;
  } catch (const std::exception& e) {
    set_error(e.what());
    return DEAIC_ERROR_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return DEAIC_ERROR_INTERNAL;
  }
}

[[noreturn]] void null_argument(const char* name) {
  throw deaic::InvalidInput(std::string("null argument: ") + name);
}

template <typename T>
T* require(T* pointer, const char* name) {
  if (!pointer) null_argument(name);
  return pointer;
}

char* copy_text(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

deaic::RunMetadata to_metadata(const deaic_run_metadata* meta) {
  deaic::RunMetadata converted;
  if (!meta) return converted;
  if (meta->dataset_source) converted.dataset_source = meta->dataset_source;
  if (meta->dataset_digest) converted.dataset_digest = meta->dataset_digest;
  if (meta->distributions_source)
    converted.distributions_source = meta->distributions_source;
  if (meta->distributions_digest)
    converted.distributions_digest = meta->distributions_digest;
  return converted;
}

deaic::ReportFormat to_format(deaic_format format) {
  switch (format) {
    case DEAIC_FORMAT_JSON:
      return deaic::ReportFormat::Json;
    case DEAIC_FORMAT_CSV:
      return deaic::ReportFormat::Csv;
  }
  throw deaic::InvalidInput("unknown output format");
}

std::size_t checked_index(std::size_t index, std::size_t size) {
  if (index >= size) {
    throw deaic::InvalidInput("index " + std::to_string(index) +
                              " out of range (size " + std::to_string(size) +
                              ")");
  }
  return index;
}

}  // namespace

extern "C" {

const char* deaic_version(void) {
  static const std::string version(deaic::kVersion);
  return version.c_str();
}

const char* deaic_last_error(void) { return t_last_error.c_str(); }

void deaic_text_free(char* text) { delete[] text; }

deaic_status deaic_digest_text(const char* text, char** out_digest) {
  return guarded([&] {
    *require(out_digest, "out_digest") = nullptr;
    *out_digest = copy_text(deaic::fnv1a64_hex(require(text, "text")));
  });
}

const char* deaic_builtin_producers_csv(void) {
  static const std::string csv(deaic::reference::producers_csv());
  return csv.c_str();
}

const char* deaic_builtin_distributions_csv(void) {
  static const std::string csv(deaic::reference::distributions_csv());
  return csv.c_str();
}

deaic_status deaic_dataset_parse(const char* csv_text, deaic_dataset** out) {
  return guarded([&] {
    *require(out, "out") = nullptr;
    deaic::Dataset parsed = deaic::parse_producers(require(csv_text, "csv_text"));
    *out = new deaic_dataset{std::move(parsed)};
  });
}

void deaic_dataset_free(deaic_dataset* dataset) { delete dataset; }

size_t deaic_dataset_size(const deaic_dataset* dataset) {
  return dataset ? dataset->impl.size() : 0;
}

const char* deaic_dataset_id(const deaic_dataset* dataset, size_t index) {
  const char* id = nullptr;
  deaic_status status = guarded([&] {
    const deaic::Dataset& impl = require(dataset, "dataset")->impl;
    id = impl.at(checked_index(index, impl.size())).id.c_str();
  });
  return status == DEAIC_OK ? id : nullptr;
}

deaic_status deaic_dataset_find(const deaic_dataset* dataset,
                                const char* producer_id, size_t* out_index) {
  return guarded([&] {
    const deaic::Dataset& impl = require(dataset, "dataset")->impl;
    auto index = impl.find(require(producer_id, "producer_id"));
    if (!index) {
      throw deaic::InvalidInput(std::string("unknown producer id '") +
                                producer_id + "'");
    }
    *require(out_index, "out_index") = *index;
  });
}

deaic_status deaic_dataset_producer(const deaic_dataset* dataset, size_t index,
                                    double* out_electricity_mwh,
                                    double* out_raw_materials,
                                    double* out_labor_hours,
                                    double* out_sales_value) {
  return guarded([&] {
    const deaic::Dataset& impl = require(dataset, "dataset")->impl;
    const deaic::Producer& p = impl.at(checked_index(index, impl.size()));
    if (out_electricity_mwh) *out_electricity_mwh = p.electricity_mwh;
    if (out_raw_materials) *out_raw_materials = p.raw_materials;
    if (out_labor_hours) *out_labor_hours = p.labor_hours;
    if (out_sales_value) *out_sales_value = p.sales_value;
  });
}

deaic_status deaic_efficiency(const deaic_dataset* dataset, size_t index,
                              double* out_z, double* out_index,
                              double* out_lambda) {
  return guarded([&] {
    const deaic::Dataset& impl = require(dataset, "dataset")->impl;
    deaic::EfficiencyResult result =
        deaic::efficiency(impl, checked_index(index, impl.size()));
    if (out_z) *out_z = result.z;
    if (out_index) *out_index = result.efficiency_index;
    if (out_lambda) {
      for (std::size_t j = 0; j < result.lambda.size(); ++j) {
        out_lambda[j] = result.lambda[j];
      }
    }
  });
}

deaic_status deaic_efficiency_report(const deaic_dataset* dataset,
                                     deaic_format format,
                                     const deaic_run_metadata* meta,
                                     char** out_text) {
  return guarded([&] {
    *require(out_text, "out_text") = nullptr;
    *out_text = copy_text(deaic::efficiency_report(
        require(dataset, "dataset")->impl, to_metadata(meta), to_format(format)));
  });
}

deaic_status deaic_what_if(const deaic_dataset* dataset,
                           const char* producer_id, double e0_mwh,
                           double* out_beta, int* out_ic_defined,
                           double* out_ic) {
  return guarded([&] {
    const deaic::Dataset& impl = require(dataset, "dataset")->impl;
    auto index = impl.find(require(producer_id, "producer_id"));
    if (!index) {
      throw deaic::InvalidInput(std::string("unknown producer id '") +
                                producer_id + "'");
    }
    deaic::WhatIfResult result = deaic::what_if(impl, *index, e0_mwh);
    if (out_beta) *out_beta = result.beta;
    if (out_ic_defined) *out_ic_defined = result.ic_rial_per_kwh ? 1 : 0;
    if (out_ic) *out_ic = result.ic_rial_per_kwh.value_or(0.0);
  });
}

deaic_status deaic_what_if_report(const deaic_dataset* dataset,
                                  const char* producer_id, double e0_mwh,
                                  deaic_format format,
                                  const deaic_run_metadata* meta,
                                  char** out_text) {
  return guarded([&] {
    *require(out_text, "out_text") = nullptr;
    const deaic::Dataset& impl = require(dataset, "dataset")->impl;
    auto index = impl.find(require(producer_id, "producer_id"));
    if (!index) {
      throw deaic::InvalidInput(std::string("unknown producer id '") +
                                producer_id + "'");
    }
    *out_text = copy_text(deaic::what_if_report(
        impl, *index, e0_mwh, to_metadata(meta), to_format(format)));
  });
}

deaic_status deaic_distributions_parse(const deaic_dataset* dataset,
                                       const char* csv_text,
                                       deaic_distributions** out) {
  return guarded([&] {
    *require(out, "out") = nullptr;
    auto parsed = deaic::parse_distributions(require(csv_text, "csv_text"),
                                             require(dataset, "dataset")->impl);
    *out = new deaic_distributions{std::move(parsed)};
  });
}

deaic_status deaic_distributions_builtin(const deaic_dataset* dataset,
                                         deaic_distributions** out) {
  return guarded([&] {
    *require(out, "out") = nullptr;
    auto parsed = deaic::parse_distributions(
        deaic::reference::distributions_csv(), require(dataset, "dataset")->impl);
    *out = new deaic_distributions{std::move(parsed)};
  });
}

deaic_status deaic_distributions_from_outages(const deaic_dataset* dataset,
                                              const char* outages_csv_text,
                                              double work_hours,
                                              deaic_distributions** out) {
  return guarded([&] {
    *require(out, "out") = nullptr;
    auto records =
        deaic::parse_outages(require(outages_csv_text, "outages_csv_text"));
    auto built = deaic::distributions_from_outages(
        require(dataset, "dataset")->impl, records, work_hours);
    *out = new deaic_distributions{std::move(built)};
  });
}

void deaic_distributions_free(deaic_distributions* dists) { delete dists; }

size_t deaic_distributions_size(const deaic_distributions* dists) {
  return dists ? dists->impl.size() : 0;
}

const char* deaic_distributions_id(const deaic_distributions* dists,
                                   size_t index) {
  const char* id = nullptr;
  deaic_status status = guarded([&] {
    const auto& impl = require(dists, "dists")->impl;
    id = impl[checked_index(index, impl.size())].producer_id.c_str();
  });
  return status == DEAIC_OK ? id : nullptr;
}

deaic_status deaic_distributions_get(const deaic_distributions* dists,
                                     size_t index, double* out_mean_mwh,
                                     double* out_std_mwh,
                                     double* out_base_mwh) {
  return guarded([&] {
    const auto& impl = require(dists, "dists")->impl;
    const deaic::EnergyDistribution& d = impl[checked_index(index, impl.size())];
    if (out_mean_mwh) *out_mean_mwh = d.mean_mwh;
    if (out_std_mwh) *out_std_mwh = d.std_mwh;
    if (out_base_mwh) *out_base_mwh = d.base_mwh;
  });
}

deaic_status deaic_estimate_costs(const deaic_dataset* dataset,
                                  const deaic_distributions* dists, int samples,
                                  uint64_t seed, const deaic_run_metadata* meta,
                                  deaic_report** out) {
  return guarded([&] {
    *require(out, "out") = nullptr;
    deaic::Report report = deaic::build_estimate_report(
        require(dataset, "dataset")->impl, require(dists, "dists")->impl, samples,
        seed, to_metadata(meta));
    *out = new deaic_report{std::move(report)};
  });
}

void deaic_report_free(deaic_report* report) { delete report; }

size_t deaic_report_size(const deaic_report* report) {
  return report ? report->impl.producers.size() : 0;
}

const char* deaic_report_id(const deaic_report* report, size_t index) {
  const char* id = nullptr;
  deaic_status status = guarded([&] {
    const auto& producers = require(report, "report")->impl.producers;
    id = producers[checked_index(index, producers.size())].producer_id.c_str();
  });
  return status == DEAIC_OK ? id : nullptr;
}

deaic_status deaic_report_summary(const deaic_report* report, size_t index,
                                  double* out_efficiency_index,
                                  double* out_mean_ic, double* out_std_ic,
                                  int* out_samples_used) {
  return guarded([&] {
    const auto& producers = require(report, "report")->impl.producers;
    const deaic::ProducerReport& p =
        producers[checked_index(index, producers.size())];
    if (out_efficiency_index) *out_efficiency_index = p.efficiency_index;
    if (out_mean_ic) *out_mean_ic = p.mean_ic;
    if (out_std_ic) *out_std_ic = p.std_ic;
    if (out_samples_used) *out_samples_used = p.n_used;
  });
}

const char* deaic_report_note(const deaic_report* report, size_t index) {
  const char* note = nullptr;
  deaic_status status = guarded([&] {
    const auto& producers = require(report, "report")->impl.producers;
    note = producers[checked_index(index, producers.size())].note.c_str();
  });
  return status == DEAIC_OK ? note : nullptr;
}

deaic_status deaic_report_write(const deaic_report* report, deaic_format format,
                                char** out_text) {
  return guarded([&] {
    *require(out_text, "out_text") = nullptr;
    *out_text = copy_text(
        deaic::write_report(require(report, "report")->impl, to_format(format)));
  });
}

}  // extern "C"
