/* C API for the aclus library: audit binary data tables for coding errors by
 * reducing every observation against the Groebner basis of the table's rule
 * ideal.
 *
 * All functions returning aclus_status set a thread-local message retrievable
 * with aclus_last_error() on failure. Every char* handed out through an `out`
 * parameter is heap-allocated; release it with aclus_string_free(). Handles
 * are opaque and freed with their matching *_free function.
 */
#ifndef ACLUS_H
#define ACLUS_H

#include <stddef.h>

#if defined(_WIN32)
#define ACLUS_API __declspec(dllexport)
#else
#define ACLUS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum aclus_status {
  ACLUS_OK = 0,
  ACLUS_ERROR = 1,            /* unclassified failure */
  ACLUS_PARSE_ERROR = 2,      /* malformed CSV or polynomial text */
  ACLUS_INVALID_ARGUMENT = 3, /* unknown labels, bad options, null pointers */
  ACLUS_GUARD_EXCEEDED = 4,   /* brute-force or enumeration guard tripped */
  ACLUS_IO_ERROR = 5
} aclus_status;

typedef struct aclus_table aclus_table;
typedef struct aclus_analysis aclus_analysis;

typedef struct aclus_load_options {
  const char *id_column;     /* row-label column; NULL: 1-based row numbers */
  const char *const *truthy; /* extra cell spellings parsed as 1 */
  size_t truthy_count;
  const char *const *falsy;  /* extra cell spellings parsed as 0 */
  size_t falsy_count;
} aclus_load_options;

ACLUS_API const char *aclus_version(void);
/* Message for the most recent failure on this thread; owned by the library. */
ACLUS_API const char *aclus_last_error(void);
ACLUS_API void aclus_string_free(char *s);

ACLUS_API aclus_status aclus_table_load_csv(const char *path,
                                            const aclus_load_options *options,
                                            aclus_table **out);
ACLUS_API aclus_status aclus_table_parse_csv(const char *csv_text,
                                             const aclus_load_options *options,
                                             aclus_table **out);
ACLUS_API void aclus_table_free(aclus_table *table);
ACLUS_API size_t aclus_table_rows(const aclus_table *table);
ACLUS_API size_t aclus_table_columns(const aclus_table *table);

/* Runs the full pipeline: weights, weighted-lex order, Groebner basis of the
 * rule ideal, and one reduction per distinct row pattern. */
ACLUS_API aclus_status aclus_analyze(const aclus_table *table,
                                     aclus_analysis **out);
ACLUS_API void aclus_analysis_free(aclus_analysis *analysis);
/* 0 when the table is empty (the ideal is the whole ring). */
ACLUS_API int aclus_analysis_consistent(const aclus_analysis *analysis);

/* `ascii` selects the &,|,!,=>,<=> connectives instead of Unicode. */
ACLUS_API aclus_status aclus_report_json(const aclus_analysis *analysis,
                                         int ascii, char **out);
ACLUS_API aclus_status aclus_report_text(const aclus_analysis *analysis,
                                         int ascii, char **out);
ACLUS_API aclus_status aclus_weights_text(const aclus_table *table, char **out);
ACLUS_API aclus_status aclus_groebner_text(const aclus_analysis *analysis,
                                           int ascii, char **out);
ACLUS_API aclus_status aclus_combine_text(const aclus_analysis *analysis,
                                          const char *const *labels,
                                          size_t label_count, int ascii,
                                          char **out);
ACLUS_API aclus_status aclus_clusters_text(const aclus_analysis *analysis,
                                           int k, int max_terms,
                                           size_t max_candidates, int ascii,
                                           char **out);
ACLUS_API aclus_status aclus_whatif_text(const aclus_table *table,
                                         const char *const *labels,
                                         size_t label_count, int ascii,
                                         char **out);
/* Normal form of an ad-hoc polynomial against the table's rule ideal. */
ACLUS_API aclus_status aclus_reduce_text(const aclus_analysis *analysis,
                                         const char *polynomial, int ascii,
                                         char **out);

#ifdef __cplusplus
}
#endif

#endif /* ACLUS_H */
