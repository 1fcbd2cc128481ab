/* C interface to the desavoid library. Every function returns a status
 * code; on failure dav_last_error() describes it. Strings handed out by the
 * library are released with dav_string_free. */
#ifndef DESAVOID_H
#define DESAVOID_H

#include <stdint.h>

#if defined(DAV_BUILDING_LIBRARY)
#define DAV_API __attribute__((visibility("default")))
#else
#define DAV_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dav_status {
  DAV_OK = 0,
  DAV_ERR_INVALID_ARGUMENT = 1,
  DAV_ERR_UNSUPPORTED_CLASS = 2,
  DAV_ERR_BUDGET_EXCEEDED = 3,
  DAV_ERR_ZMODE_MISMATCH = 4,
  DAV_ERR_NONUNIT = 5,
  DAV_ERR_INTERNAL = 6
} dav_status;

typedef enum dav_mode { DAV_MODE_REDUCED = 0, DAV_MODE_EXACT = 1 } dav_mode;
typedef enum dav_zmode { DAV_Z_ONES = 0, DAV_Z_SYMBOLIC = 1 } dav_zmode;
typedef enum dav_format { DAV_FORMAT_TEXT = 0, DAV_FORMAT_JSON = 1 } dav_format;

typedef enum dav_method {
  DAV_METHOD_BRUTE = 0,
  DAV_METHOD_DP = 1,
  DAV_METHOD_RECIPROCITY = 2,
  DAV_METHOD_CLOSED = 3
} dav_method;

typedef enum dav_identity {
  DAV_IDENTITY_DES = 0,
  DAV_IDENTITY_RIS = 1,
  DAV_IDENTITY_LEV = 2,
  DAV_IDENTITY_WDES = 3
} dav_identity;

typedef struct dav_pattern dav_pattern;
typedef struct dav_series dav_series;
typedef struct dav_report dav_report;

typedef struct dav_options {
  int alphabet;     /* k, 1..16 */
  int order;        /* N >= 0 */
  dav_zmode zmode;
  int threads;      /* brute force shards */
  uint64_t budget;  /* work budget for the oracles */
} dav_options;

DAV_API void dav_options_init(dav_options* opt);

DAV_API const char* dav_version(void);
DAV_API const char* dav_last_error(void);
/* Property named by the last DAV_ERR_UNSUPPORTED_CLASS, or "". */
DAV_API const char* dav_last_failing_property(void);
DAV_API void dav_string_free(char* s);

/* Compact digits ("2341") or comma separated letters ("10,3,11"). */
DAV_API dav_status dav_pattern_create(const char* text, dav_mode mode, dav_pattern** out);
DAV_API void dav_pattern_destroy(dav_pattern* p);
DAV_API int dav_pattern_length(const dav_pattern* p);
DAV_API int dav_pattern_max_letter(const dav_pattern* p);

/* alphabet 0 classifies over the positive integers. */
DAV_API dav_status dav_classify(const dav_pattern* p, int alphabet, dav_format fmt, char** out);

DAV_API dav_status dav_series_compute(const dav_pattern* p, const dav_options* opt,
                                      dav_method method, dav_series** out);
DAV_API dav_status dav_series_parse_json(const char* json, dav_series** out);
DAV_API void dav_series_destroy(dav_series* s);
DAV_API int dav_series_order(const dav_series* s);
/* Coefficient of x^x_power t^t_power at z = 1, as "p/q" or an integer. */
DAV_API dav_status dav_series_coefficient(const dav_series* s, int t_power, int x_power, char** out);
DAV_API dav_status dav_series_render(const dav_series* s, dav_format fmt, char** out);
DAV_API int dav_series_equal(const dav_series* a, const dav_series* b);

DAV_API dav_status dav_weights(const dav_pattern* p, const dav_options* opt, dav_format fmt, char** out);
/* Fixed point sums, theta_h and reciprocal coefficients for n = 0..order. */
DAV_API dav_status dav_fixpoints(const dav_pattern* p, const dav_options* opt, dav_format fmt, char** out);

/* Runs every applicable method and diffs against dp. corrupt_pair ("a,b")
 * perturbs one weight table entry and exists for testing; pass NULL. */
DAV_API dav_status dav_verify(const dav_pattern* p, const dav_options* opt, const char* corrupt_pair,
                              dav_report** out);
DAV_API dav_status dav_identity_check(dav_identity which, int alphabet, int order, int trials,
                                      uint64_t seed, dav_report** out);
DAV_API int dav_report_agree(const dav_report* r);
DAV_API dav_status dav_report_render(const dav_report* r, dav_format fmt, char** out);
DAV_API void dav_report_destroy(dav_report* r);

#ifdef __cplusplus
}
#endif

#endif
