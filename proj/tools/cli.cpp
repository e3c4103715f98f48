#include "cli.hpp"

#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "deaic.h"

namespace deaic_cli {
namespace {

struct TextDeleter {
  void operator()(char* text) const { deaic_text_free(text); }
};
using Text = std::unique_ptr<char, TextDeleter>;

struct DatasetDeleter {
  void operator()(deaic_dataset* d) const { deaic_dataset_free(d); }
};
using DatasetPtr = std::unique_ptr<deaic_dataset, DatasetDeleter>;

struct DistributionsDeleter {
  void operator()(deaic_distributions* d) const { deaic_distributions_free(d); }
};
using DistributionsPtr =
    std::unique_ptr<deaic_distributions, DistributionsDeleter>;

struct ReportDeleter {
  void operator()(deaic_report* r) const { deaic_report_free(r); }
};
using ReportPtr = std::unique_ptr<deaic_report, ReportDeleter>;

// Nonzero exit code for a failed library call: 1 for solver-level trouble,
// 2 for anything the caller can fix.
int fail(deaic_status status, std::ostream& err) {
  err << "error: " << deaic_last_error() << "\n";
  return status == DEAIC_ERROR_INTERNAL ? 1 : 2;
}

bool read_file(const std::string& path, std::string& text, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "error: cannot read '" << path << "'\n";
    return false;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    err << "error: cannot read '" << path << "'\n";
    return false;
  }
  text = buffer.str();
  return true;
}

bool write_output(const std::string& text, const std::string& out_path,
                  std::ostream& out, std::ostream& err) {
  if (out_path.empty()) {
    out << text;
    return true;
  }
  std::ofstream file(out_path, std::ios::binary);
  file << text;
  file.flush();
  if (!file) {
    err << "error: cannot write '" << out_path << "'\n";
    return false;
  }
  return true;
}

deaic_format parse_format(const std::string& name) {
  return name == "csv" ? DEAIC_FORMAT_CSV : DEAIC_FORMAT_JSON;
}

std::string digest_of(const std::string& text) {
  char* raw = nullptr;
  if (deaic_digest_text(text.c_str(), &raw) != DEAIC_OK) return "";
  Text owned(raw);
  return std::string(owned.get());
}

// Options shared by every subcommand.
struct CommonOptions {
  bool builtin = false;
  std::string dataset_path;
  std::string out_path;
  std::string format = "json";

  void attach(CLI::App& cmd) {
    cmd.add_flag("--builtin", builtin,
                 "Use the embedded eight-producer study data");
    cmd.add_option("--dataset", dataset_path, "Producer table csv");
    cmd.add_option("--out", out_path,
                   "Write machine output here instead of stdout");
    cmd.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
  }
};

struct LoadedDataset {
  DatasetPtr handle;
  std::string source;
  std::string digest;
};

// Exactly one of --dataset / --builtin; 0 exit code on success.
int load_dataset(const CommonOptions& opts, LoadedDataset& loaded,
                 std::ostream& err) {
  if (opts.builtin == !opts.dataset_path.empty()) {
    err << "error: pass exactly one of --dataset or --builtin\n";
    return 2;
  }
  std::string text;
  if (opts.builtin) {
    text = deaic_builtin_producers_csv();
    loaded.source = "builtin";
  } else {
    if (!read_file(opts.dataset_path, text, err)) return 2;
    loaded.source = opts.dataset_path;
  }
  deaic_dataset* raw = nullptr;
  if (deaic_status status = deaic_dataset_parse(text.c_str(), &raw);
      status != DEAIC_OK) {
    return fail(status, err);
  }
  loaded.handle.reset(raw);
  loaded.digest = digest_of(text);
  return 0;
}

deaic_run_metadata make_metadata(const LoadedDataset& dataset,
                                 const std::string& dist_source,
                                 const std::string& dist_digest) {
  deaic_run_metadata meta{};
  meta.dataset_source = dataset.source.c_str();
  meta.dataset_digest = dataset.digest.c_str();
  meta.distributions_source = dist_source.c_str();
  meta.distributions_digest = dist_digest.c_str();
  return meta;
}

int cmd_efficiency(const CommonOptions& opts, std::ostream& out,
                   std::ostream& err) {
  LoadedDataset dataset;
  if (int code = load_dataset(opts, dataset, err)) return code;
  const std::string none;
  deaic_run_metadata meta = make_metadata(dataset, none, none);
  char* raw = nullptr;
  if (deaic_status status = deaic_efficiency_report(
          dataset.handle.get(), parse_format(opts.format), &meta, &raw);
      status != DEAIC_OK) {
    return fail(status, err);
  }
  Text text(raw);
  return write_output(text.get(), opts.out_path, out, err) ? 0 : 2;
}

struct EstimateOptions {
  CommonOptions common;
  std::string distributions_path;
  std::string outages_path;
  int samples = 1000;
  std::uint64_t seed = 42;
  double work_hours = 8760.0;
};

int cmd_estimate_cost(const EstimateOptions& opts, std::ostream& out,
                      std::ostream& err) {
  const int sources = (opts.common.builtin ? 1 : 0) +
                      (opts.distributions_path.empty() ? 0 : 1) +
                      (opts.outages_path.empty() ? 0 : 1);
  if (sources != 1) {
    err << "error: pass exactly one of --distributions, --outages or "
           "--builtin\n";
    return 2;
  }
  LoadedDataset dataset;
  if (int code = load_dataset(opts.common, dataset, err)) return code;

  std::string dist_text;
  std::string dist_source;
  DistributionsPtr dists;
  deaic_distributions* raw_dists = nullptr;
  deaic_status status = DEAIC_OK;
  if (opts.common.builtin) {
    dist_text = deaic_builtin_distributions_csv();
    dist_source = "builtin";
    status = deaic_distributions_builtin(dataset.handle.get(), &raw_dists);
  } else if (!opts.distributions_path.empty()) {
    if (!read_file(opts.distributions_path, dist_text, err)) return 2;
    dist_source = opts.distributions_path;
    status = deaic_distributions_parse(dataset.handle.get(), dist_text.c_str(),
                                       &raw_dists);
  } else {
    if (!read_file(opts.outages_path, dist_text, err)) return 2;
    dist_source = opts.outages_path;
    status = deaic_distributions_from_outages(
        dataset.handle.get(), dist_text.c_str(), opts.work_hours, &raw_dists);
  }
  if (status != DEAIC_OK) return fail(status, err);
  dists.reset(raw_dists);

  deaic_run_metadata meta =
      make_metadata(dataset, dist_source, digest_of(dist_text));
  deaic_report* raw_report = nullptr;
  status = deaic_estimate_costs(dataset.handle.get(), dists.get(), opts.samples,
                                opts.seed, &meta, &raw_report);
  if (status != DEAIC_OK) return fail(status, err);
  ReportPtr report(raw_report);

  for (size_t i = 0; i < deaic_report_size(report.get()); ++i) {
    const char* id = deaic_report_id(report.get(), i);
    double mean_ic = 0.0;
    double std_ic = 0.0;
    int used = 0;
    deaic_report_summary(report.get(), i, nullptr, &mean_ic, &std_ic, &used);
    err << id << ": mean ic " << mean_ic << " Rial/kWh (std " << std_ic
        << ", samples " << used << ")\n";
    const char* note = deaic_report_note(report.get(), i);
    if (note && note[0] != '\0') err << "note: " << id << ": " << note << "\n";
  }

  char* raw_text = nullptr;
  status = deaic_report_write(report.get(), parse_format(opts.common.format),
                              &raw_text);
  if (status != DEAIC_OK) return fail(status, err);
  Text text(raw_text);
  return write_output(text.get(), opts.common.out_path, out, err) ? 0 : 2;
}

struct WhatIfOptions {
  CommonOptions common;
  std::string producer_id;
  double e0_mwh = 0.0;
};

int cmd_what_if(const WhatIfOptions& opts, std::ostream& out,
                std::ostream& err) {
  LoadedDataset dataset;
  if (int code = load_dataset(opts.common, dataset, err)) return code;

  double beta = 0.0;
  int ic_defined = 0;
  double ic = 0.0;
  if (deaic_status status =
          deaic_what_if(dataset.handle.get(), opts.producer_id.c_str(),
                        opts.e0_mwh, &beta, &ic_defined, &ic);
      status != DEAIC_OK) {
    return fail(status, err);
  }
  err << opts.producer_id << ": beta " << beta << " (sales at "
      << opts.e0_mwh << " MWh), ic ";
  if (ic_defined) {
    err << ic << " Rial/kWh\n";
  } else {
    err << "n/a\n";
  }

  const std::string none;
  deaic_run_metadata meta = make_metadata(dataset, none, none);
  char* raw = nullptr;
  if (deaic_status status = deaic_what_if_report(
          dataset.handle.get(), opts.producer_id.c_str(), opts.e0_mwh,
          parse_format(opts.common.format), &meta, &raw);
      status != DEAIC_OK) {
    return fail(status, err);
  }
  Text text(raw);
  return write_output(text.get(), opts.common.out_path, out, err) ? 0 : 2;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Power interruption cost estimation from producer benchmarks"};
  app.set_version_flag("--version", deaic_version());
  app.require_subcommand(1);

  auto* eff = app.add_subcommand(
      "efficiency", "Relative efficiency of every producer in the dataset");
  CommonOptions eff_opts;
  eff_opts.attach(*eff);

  auto* est = app.add_subcommand(
      "estimate-cost",
      "Monte Carlo per-kWh interruption cost for every producer");
  EstimateOptions est_opts;
  est_opts.common.attach(*est);
  est->add_option("--distributions", est_opts.distributions_path,
                  "Uninterrupted-energy distribution csv");
  est->add_option("--outages", est_opts.outages_path,
                  "Outage record csv; distributions are built from it");
  est->add_option("--samples", est_opts.samples, "Monte Carlo draws per producer")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  est->add_option("--seed", est_opts.seed, "Random seed")
      ->capture_default_str();
  est->add_option("--work-hours", est_opts.work_hours,
                  "Hours behind the average-power demand fallback")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* wi = app.add_subcommand(
      "what-if", "Sales estimate for one producer at a given consumption");
  WhatIfOptions wi_opts;
  wi_opts.common.attach(*wi);
  wi->add_option("producer_id", wi_opts.producer_id, "Producer to estimate")
      ->required();
  wi->add_option("e0_mwh", wi_opts.e0_mwh,
                 "Uninterrupted electricity consumption, MWh")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  if (eff->parsed()) return cmd_efficiency(eff_opts, out, err);
  if (est->parsed()) return cmd_estimate_cost(est_opts, out, err);
  return cmd_what_if(wi_opts, out, err);
}

}  // namespace deaic_cli
