#ifndef HILBTAUT_H
#define HILBTAUT_H

#include <stdint.h>

#if defined(HILBTAUT_BUILDING_LIBRARY)
#define HT_API __attribute__((visibility("default")))
#else
#define HT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Non-zero values match the library's internal error codes. */
typedef enum ht_status {
  HT_OK = 0,
  HT_ERR_ORDER_MISMATCH = 1,
  HT_ERR_NON_UNIT_BASE = 2,
  HT_ERR_COMPOSITION_DOMAIN = 3,
  HT_ERR_NON_INVERTIBLE = 4,
  HT_ERR_DOMAIN = 5,
  HT_ERR_BRANCH = 6,
  HT_ERR_RANGE = 7,
  HT_ERR_UNKNOWN_SERIES = 8,
  HT_ERR_PANEL = 9,
  HT_ERR_UNIVERSALITY_VIOLATION = 10,
  HT_ERR_INCONSISTENT_SPECIALIZATION = 11,
  HT_ERR_INVALID_ARGUMENT = 12,
  HT_ERR_PARSE = 13,
  HT_ERR_INTERNAL = 14
} ht_status;

/* Opaque truncated power series with exact rational coefficients. */
typedef struct ht_series ht_series;

/* Message for the last failing call on this thread; never NULL. */
HT_API const char* ht_last_error(void);
HT_API const char* ht_status_name(ht_status status);
/* Frees any string returned through a char** out-parameter. */
HT_API void ht_string_free(char* s);

/* Series JSON: {"variable": "t", "order": N, "coefficients": ["p/q", ...]}. */
HT_API ht_status ht_series_parse_json(const char* json, ht_series** out);
HT_API ht_status ht_series_to_json(const ht_series* s, char** out);
HT_API void ht_series_free(ht_series* s);
HT_API int ht_series_order(const ht_series* s);
/* Coefficient k as "p/q". */
HT_API ht_status ht_series_coefficient(const ht_series* s, int k, char** out);

HT_API ht_status ht_series_mul(const ht_series* a, const ht_series* b, ht_series** out);
HT_API ht_status ht_series_compose(const ht_series* outer, const ht_series* inner, ht_series** out);
HT_API ht_status ht_series_revert(const ht_series* a, ht_series** out);
/* exponent is a rational string such as "-1/2". */
HT_API ht_status ht_series_pow_rational(const ht_series* a, const char* exponent, ht_series** out);
HT_API ht_status ht_series_log(const ht_series* a, ht_series** out);
HT_API ht_status ht_series_exp(const ht_series* a, ht_series** out);
HT_API ht_status ht_series_derivative(const ht_series* a, ht_series** out);

/* Catalog of closed forms: JSON listing of families, ranks and statuses. */
HT_API ht_status ht_catalog_json(char** out);
/* family: segreA, chernA, verlindeB, y, Y. rank is s (Segre/Chern) or r (Verlinde);
   rank and index are ignored for y and Y. metadata (optional) receives a JSON object. */
HT_API ht_status ht_catalog_series(const char* family, int rank, int index, int order, ht_series** out,
                                   char** metadata);
HT_API ht_status ht_segre_full(int s, long c2, long c1sq, long chi_o, long c1k, long ksq, int order,
                               int allow_conjectural, ht_series** out);
HT_API ht_status ht_verlinde_full(int r, long chi_l, long chi_o, long c1k, long ksq, int order,
                                  int allow_conjectural, ht_series** out);

/* JSON array of suite names. */
HT_API ht_status ht_verify_suite_names(char** out);
/* Runs a suite (or "all"); out receives a JSON report, all_passed 1 or 0. */
HT_API ht_status ht_verify_run(const char* suite, int order, uint64_t seed, int random_cases, char** out,
                               int* all_passed);

/* kind: segre, chern, verlinde. Computes n' = 0..n; r is used by verlinde only,
   where the class must be a single line bundle. */
HT_API ht_status ht_oracle_run(const char* surface, const char* class_spec, int n, const char* kind, int r,
                               uint64_t seed, char** out);

/* kind: segre (rank is s) or verlinde (rank is r). all_matched is 1 when every
   series with a proven or trivial closed form matches it exactly. */
HT_API ht_status ht_extract_run(const char* kind, int rank, int order, uint64_t seed, char** out,
                                int* all_matched);

#ifdef __cplusplus
}
#endif

#endif
