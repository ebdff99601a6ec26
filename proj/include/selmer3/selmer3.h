#ifndef SELMER3_H
#define SELMER3_H

/* C interface to libselmer3. Every function returns a status code; on
 * failure selmer3_last_error() describes the problem (per thread). Strings
 * handed out by the library are released with selmer3_string_free. */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define SELMER3_API __attribute__((visibility("default")))
#else
#define SELMER3_API
#endif

typedef enum selmer3_status {
  SELMER3_OK = 0,
  SELMER3_E_DEGENERATE_CURVE = 1,
  SELMER3_E_OUT_OF_RANGE = 2,
  SELMER3_E_DISC_MISMATCH = 3,
  SELMER3_E_PRECONDITION = 4,
  SELMER3_E_UNFACTORABLE = 5,
  SELMER3_E_BAD_REDUCTION_PRIME = 6,
  SELMER3_E_PARSE = 7,
  SELMER3_E_INVALID_ARGUMENT = 8,
  SELMER3_E_INTERNAL = 99
} selmer3_status;

typedef struct selmer3_report selmer3_report;
typedef struct selmer3_classgroup selmer3_classgroup;

typedef struct selmer3_bounds {
  int64_t lower;
  int64_t upper;
  int has_upper; /* 0 when a needed class group was out of range */
} selmer3_bounds;

typedef enum selmer3_bound_kind {
  SELMER3_BOUND_PSI = 0,
  SELMER3_BOUND_PSIHAT = 1,
  SELMER3_BOUND_SEL3 = 2
} selmer3_bound_kind;

SELMER3_API const char* selmer3_version(void);
SELMER3_API const char* selmer3_last_error(void);
SELMER3_API const char* selmer3_status_name(selmer3_status s);
SELMER3_API void selmer3_string_free(char* s);

/* Largest |D| accepted by the class-group engine; 0 restores the default
 * (or the SELMER3_MAX_DISC environment value). */
SELMER3_API selmer3_status selmer3_set_max_disc(int64_t bound);

/* Full analysis of E_{a,b}. rank_lo/rank_hi are used when has_rank != 0. */
SELMER3_API selmer3_status selmer3_analyze(int64_t a, int64_t b, int has_rank, int64_t rank_lo,
                                           int64_t rank_hi, selmer3_report** out);
SELMER3_API void selmer3_report_free(selmer3_report* r);
SELMER3_API selmer3_status selmer3_report_bounds(const selmer3_report* r, selmer3_bound_kind kind,
                                                 selmer3_bounds* out);
/* Normalized parameters. */
SELMER3_API selmer3_status selmer3_report_params(const selmer3_report* r, int64_t* a, int64_t* b);
/* -1 or +1, or 0 when not applicable. */
SELMER3_API selmer3_status selmer3_report_root_number(const selmer3_report* r, int* out);
SELMER3_API selmer3_status selmer3_report_json(const selmer3_report* r, char** json_out);
/* Human-readable multi-line summary. */
SELMER3_API selmer3_status selmer3_report_text(const selmer3_report* r, char** text_out);

/* Reference-table harness over a CSV file. JSON object with rows and summary counts. */
SELMER3_API selmer3_status selmer3_table_check(const char* csv_path, unsigned threads, char** json_out);

/* Family streams as JSON lines (one member per line). */
SELMER3_API selmer3_status selmer3_family_large_rank(int n, int count, char** jsonl_out);
SELMER3_API selmer3_status selmer3_family_biquadratic(int64_t a_prime, int count, char** jsonl_out);

SELMER3_API selmer3_status selmer3_density(int64_t xmax, unsigned threads, char** json_out);

SELMER3_API selmer3_status selmer3_classgroup_new(int64_t disc, selmer3_classgroup** out);
SELMER3_API void selmer3_classgroup_free(selmer3_classgroup* g);
SELMER3_API selmer3_status selmer3_classgroup_order(const selmer3_classgroup* g, int64_t* order);
SELMER3_API selmer3_status selmer3_classgroup_three_rank(const selmer3_classgroup* g, int* rank);
SELMER3_API selmer3_status selmer3_classgroup_json(const selmer3_classgroup* g, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* SELMER3_H */
