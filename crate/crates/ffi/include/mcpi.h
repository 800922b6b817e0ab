#ifndef MCPI_H
#define MCPI_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum McpiStatus {
  MCPI_STATUS_OK = 0,
  MCPI_STATUS_NULL_POINTER = 1,
  MCPI_STATUS_INVALID_UTF8 = 2,
  MCPI_STATUS_IO = 3,
  MCPI_STATUS_VALIDATION = 4,
  MCPI_STATUS_OUT_OF_RANGE = 5,
  MCPI_STATUS_PANIC = 6,
} McpiStatus;

typedef enum McpiMetric {
  MCPI_METRIC_FINITE = 0,
  MCPI_METRIC_POSITIVE_INFINITY = 1,
  MCPI_METRIC_NEGATIVE_INFINITY = 2,
} McpiMetric;

/**
 * A validated dataset with its computed results.
 */
typedef struct McpiAnalysis McpiAnalysis;

/**
 * Overall intervals recomputed without one dimension.
 */
typedef struct McpiExclusion McpiExclusion;

/**
 * Overall result of one alternative. Closeness values are fractions in
 * `[0, 1]`; `span` is in percentage points.
 */
typedef struct McpiOverall {
  double lower;
  double upper;
  double span;
  double normalized_span;
  size_t rank;
  uint8_t stars;
} McpiOverall;

typedef struct McpiExclusionRow {
  double lower;
  double upper;
  double span;
  double normalized_span;
  size_t rank;
  size_t baseline_rank;
  int64_t delta_rank;
  uint8_t stars;
} McpiExclusionRow;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds an analysis from CSV text and a JSON config.
 *
 * # Safety
 * `data` and `config` must be NUL-terminated strings; `out` must be writable.
 */
enum McpiStatus mcpi_analysis_from_strings(const char *data,
                                           const char *config,
                                           struct McpiAnalysis **out);

/**
 * Builds an analysis from a CSV file and a JSON config file.
 *
 * # Safety
 * Both paths must be NUL-terminated strings; `out` must be writable.
 */
enum McpiStatus mcpi_analysis_from_files(const char *data_path,
                                         const char *config_path,
                                         struct McpiAnalysis **out);

/**
 * # Safety
 * `analysis` must come from an `mcpi_analysis_from_*` call, or be null.
 */
void mcpi_analysis_free(struct McpiAnalysis *analysis);

/**
 * # Safety
 * `analysis` must be a live handle; `out` must be writable.
 */
enum McpiStatus mcpi_analysis_alternative_count(const struct McpiAnalysis *analysis, size_t *out);

/**
 * # Safety
 * `analysis` must be a live handle; `out` must be writable.
 */
enum McpiStatus mcpi_analysis_dimension_count(const struct McpiAnalysis *analysis, size_t *out);

/**
 * Name of the alternative at `index` (input row order). The string lives as
 * long as the handle.
 *
 * # Safety
 * `analysis` must be a live handle; `out` must be writable.
 */
enum McpiStatus mcpi_analysis_alternative_name(const struct McpiAnalysis *analysis,
                                               size_t index,
                                               const char **out);

/**
 * Id of the dimension at `index` (config order). The string lives as long
 * as the handle.
 *
 * # Safety
 * `analysis` must be a live handle; `out` must be writable.
 */
enum McpiStatus mcpi_analysis_dimension_id(const struct McpiAnalysis *analysis,
                                           size_t index,
                                           const char **out);

/**
 * Overall interval, rank and rating of the alternative at `index` (input
 * row order).
 *
 * # Safety
 * `analysis` must be a live handle; `out` must be writable.
 */
enum McpiStatus mcpi_analysis_overall(const struct McpiAnalysis *analysis,
                                      size_t index,
                                      struct McpiOverall *out);

/**
 * `[strong, weak]` closeness of one alternative on one dimension.
 *
 * # Safety
 * `analysis` must be a live handle; `strong` and `weak` must be writable.
 */
enum McpiStatus mcpi_analysis_dimension_interval(const struct McpiAnalysis *analysis,
                                                 size_t alternative,
                                                 size_t dimension,
                                                 double *strong,
                                                 double *weak);

/**
 * Recomputes overall intervals without the named dimension.
 *
 * # Safety
 * `analysis` must be a live handle, `dimension` a NUL-terminated string and
 * `out` writable.
 */
enum McpiStatus mcpi_analysis_exclude(const struct McpiAnalysis *analysis,
                                      const char *dimension,
                                      struct McpiExclusion **out);

/**
 * # Safety
 * `exclusion` must come from [`mcpi_analysis_exclude`], or be null.
 */
void mcpi_exclusion_free(struct McpiExclusion *exclusion);

/**
 * Row `index` of an exclusion, in the input row order of the analysis.
 *
 * # Safety
 * `exclusion` must be a live handle; `out` must be writable.
 */
enum McpiStatus mcpi_exclusion_row(const struct McpiExclusion *exclusion,
                                   size_t index,
                                   struct McpiExclusionRow *out);

/**
 * The JSON report (same document as `mcpi compute --format json`) using the
 * options of the config. Release with [`mcpi_string_free`].
 *
 * # Safety
 * `analysis` must be a live handle; `out` must be writable.
 */
enum McpiStatus mcpi_analysis_report_json(const struct McpiAnalysis *analysis, char **out);

/**
 * # Safety
 * `s` must come from this library, or be null.
 */
void mcpi_string_free(char *s);

/**
 * Minkowski distance of order `p` (`metric == Finite`, `p >= 1`) or the
 * max / min absolute coordinate difference.
 *
 * # Safety
 * `x` and `y` must point to `len` doubles; `out` must be writable.
 */
enum McpiStatus mcpi_lp_distance(const double *x,
                                 const double *y,
                                 size_t len,
                                 enum McpiMetric metric,
                                 double p,
                                 double *out);

/**
 * Message of the last failed call on this thread, or null. Valid until the
 * next failing call on the same thread.
 */
const char *mcpi_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MCPI_H */
