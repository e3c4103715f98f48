/* C interface to the interruption-cost library.
 *
 * Conventions:
 *   - Every fallible call returns a deaic_status; DEAIC_OK means success.
 *   - On failure, deaic_last_error() returns a message describing the most
 *     recent failing call on the current thread. The pointer stays valid
 *     until that thread's next failing call.
 *   - Objects created through *_parse / *_builtin / deaic_estimate_costs are
 *     owned by the caller and released with the matching *_free.
 *   - char** out parameters receive a NUL-terminated buffer owned by the
 *     caller; release it with deaic_text_free.
 *   - All functions are thread-safe on distinct objects; sharing one object
 *     across threads needs external synchronization only for frees.
 */

#ifndef DEAIC_H
#define DEAIC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(DEAIC_BUILD)
#    define DEAIC_API __declspec(dllexport)
#  else
#    define DEAIC_API __declspec(dllimport)
#  endif
#else
#  if defined(DEAIC_BUILD)
#    define DEAIC_API __attribute__((visibility("default")))
#  else
#    define DEAIC_API
#  endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum deaic_status {
  DEAIC_OK = 0,
  /* Malformed or contradictory caller input: bad csv, unknown id, bad
   * sample count, null pointer. */
  DEAIC_ERROR_INVALID_INPUT = 1,
  /* Structurally valid request outside the model's domain, e.g. a what-if
   * consumption below the producer's actual consumption. */
  DEAIC_ERROR_DOMAIN = 2,
  /* Solver or library defect; the message carries diagnostic detail. */
  DEAIC_ERROR_INTERNAL = 3
} deaic_status;

typedef enum deaic_format {
  DEAIC_FORMAT_JSON = 0,
  DEAIC_FORMAT_CSV = 1
} deaic_format;

/* A validated producer table (inputs and sales per producer). */
typedef struct deaic_dataset deaic_dataset;
/* Uninterrupted-energy distributions joined against a dataset. */
typedef struct deaic_distributions deaic_distributions;
/* Results of a full cost-estimation run, ready to serialize. */
typedef struct deaic_report deaic_report;

/* Input provenance echoed into serialized reports. Pointers may be NULL
 * (treated as empty). The struct is read during the call only. */
typedef struct deaic_run_metadata {
  const char* dataset_source;
  const char* dataset_digest;
  const char* distributions_source;
  const char* distributions_digest;
} deaic_run_metadata;

DEAIC_API const char* deaic_version(void);
DEAIC_API const char* deaic_last_error(void);
DEAIC_API void deaic_text_free(char* text);

/* "fnv1a64:" + 16 hex digits over the bytes of text. */
DEAIC_API deaic_status deaic_digest_text(const char* text, char** out_digest);

/* Embedded eight-producer study data in the csv formats parsed below. */
DEAIC_API const char* deaic_builtin_producers_csv(void);
DEAIC_API const char* deaic_builtin_distributions_csv(void);

/* ---- dataset ---------------------------------------------------------- */

/* Header: id,electricity_mwh,raw_materials_e10_rial,labor_hours_e6,sales_e10_rial */
DEAIC_API deaic_status deaic_dataset_parse(const char* csv_text,
                                           deaic_dataset** out);
DEAIC_API void deaic_dataset_free(deaic_dataset* dataset);
DEAIC_API size_t deaic_dataset_size(const deaic_dataset* dataset);
/* NULL and an error message on a bad index. */
DEAIC_API const char* deaic_dataset_id(const deaic_dataset* dataset,
                                       size_t index);
DEAIC_API deaic_status deaic_dataset_find(const deaic_dataset* dataset,
                                          const char* producer_id,
                                          size_t* out_index);
DEAIC_API deaic_status deaic_dataset_producer(const deaic_dataset* dataset,
                                              size_t index,
                                              double* out_electricity_mwh,
                                              double* out_raw_materials,
                                              double* out_labor_hours,
                                              double* out_sales_value);

/* ---- efficiency ------------------------------------------------------- */

/* Output-oriented efficiency of one producer. out_z receives the maximal
 * proportional sales expansion (>= 1), out_index its reciprocal in (0, 1].
 * out_lambda, when non-NULL, must have deaic_dataset_size() slots and
 * receives the optimal peer weights. */
DEAIC_API deaic_status deaic_efficiency(const deaic_dataset* dataset,
                                        size_t index, double* out_z,
                                        double* out_index,
                                        double* out_lambda);

/* Efficiency table for the whole dataset.
 * Csv columns: id,z,efficiency_index. */
DEAIC_API deaic_status deaic_efficiency_report(const deaic_dataset* dataset,
                                               deaic_format format,
                                               const deaic_run_metadata* meta,
                                               char** out_text);

/* ---- what-if estimate ------------------------------------------------- */

/* Estimated sales at consumption e0_mwh (labor scaled proportionally, raw
 * materials unchanged) and the point interruption cost. e0_mwh below the
 * producer's actual consumption is a domain error. When the energy gain is
 * too small for a defined cost, *out_ic_defined is 0 and *out_ic is 0. */
DEAIC_API deaic_status deaic_what_if(const deaic_dataset* dataset,
                                     const char* producer_id, double e0_mwh,
                                     double* out_beta, int* out_ic_defined,
                                     double* out_ic);

/* Csv columns: producer_id,e0_mwh,beta,ic_rial_per_kwh (`n/a` when the
 * cost is undefined; json writes null). */
DEAIC_API deaic_status deaic_what_if_report(const deaic_dataset* dataset,
                                            const char* producer_id,
                                            double e0_mwh, deaic_format format,
                                            const deaic_run_metadata* meta,
                                            char** out_text);

/* ---- distributions ---------------------------------------------------- */

/* Header: producer_id,mean_mwh,std_mwh. Base consumption is joined from
 * the dataset; unknown ids are rejected. */
DEAIC_API deaic_status deaic_distributions_parse(const deaic_dataset* dataset,
                                                 const char* csv_text,
                                                 deaic_distributions** out);
/* The embedded distributions joined against the given dataset. */
DEAIC_API deaic_status deaic_distributions_builtin(const deaic_dataset* dataset,
                                                   deaic_distributions** out);
/* Builds one distribution per dataset producer from outage records
 * (header: producer_id,duration_h,demand_mw; demand may be blank, in which
 * case the producer's average power over work_hours stands in). */
DEAIC_API deaic_status deaic_distributions_from_outages(
    const deaic_dataset* dataset, const char* outages_csv_text,
    double work_hours, deaic_distributions** out);
DEAIC_API void deaic_distributions_free(deaic_distributions* dists);
DEAIC_API size_t deaic_distributions_size(const deaic_distributions* dists);
DEAIC_API const char* deaic_distributions_id(const deaic_distributions* dists,
                                             size_t index);
DEAIC_API deaic_status deaic_distributions_get(const deaic_distributions* dists,
                                               size_t index,
                                               double* out_mean_mwh,
                                               double* out_std_mwh,
                                               double* out_base_mwh);

/* ---- cost estimation -------------------------------------------------- */

/* Seeded Monte Carlo cost estimate for every distribution entry. samples
 * must be >= 1; identical (dataset, distributions, samples, seed) yield an
 * identical report. */
DEAIC_API deaic_status deaic_estimate_costs(const deaic_dataset* dataset,
                                            const deaic_distributions* dists,
                                            int samples, uint64_t seed,
                                            const deaic_run_metadata* meta,
                                            deaic_report** out);
DEAIC_API void deaic_report_free(deaic_report* report);
DEAIC_API size_t deaic_report_size(const deaic_report* report);
DEAIC_API const char* deaic_report_id(const deaic_report* report, size_t index);
/* Out pointers may be NULL to skip a field. */
DEAIC_API deaic_status deaic_report_summary(const deaic_report* report,
                                            size_t index,
                                            double* out_efficiency_index,
                                            double* out_mean_ic,
                                            double* out_std_ic,
                                            int* out_samples_used);
/* NULL and an error on a bad index; empty string when there is no note. */
DEAIC_API const char* deaic_report_note(const deaic_report* report,
                                        size_t index);
/* Json: full run summary embedding the sample series.
 * Csv: producer_id,sample_index,e0_mwh,beta,ic_rial_per_kwh. */
DEAIC_API deaic_status deaic_report_write(const deaic_report* report,
                                          deaic_format format,
                                          char** out_text);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DEAIC_H */
