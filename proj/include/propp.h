/* propp — Property P certification for closed-braid knots.
 *
 * C interface to the exact-arithmetic core: opaque handles, status codes,
 * and JSON string outputs. Every char* returned through an out-parameter is
 * heap-allocated and must be released with propp_string_free(); every
 * propp_word must be released with propp_word_free().
 */
#ifndef PROPP_H
#define PROPP_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum propp_status {
  PROPP_OK = 0,
  PROPP_ERR_SYNTAX = 1,       /* word grammar violation; see propp_last_error */
  PROPP_ERR_ALPHABET = 2,     /* wrong alphabet / strand count for operation */
  PROPP_ERR_NOT_KNOT = 3,     /* closure has the wrong number of components */
  PROPP_ERR_BUDGET = 4,       /* search budget exhausted */
  PROPP_ERR_BOUNDS = 5,       /* enumeration bounds outside the proven range */
  PROPP_ERR_BAD_ARGUMENT = 6, /* null pointer or invalid parameter */
  PROPP_ERR_INTERNAL = 7
} propp_status;

typedef struct propp_word propp_word;

typedef enum propp_alphabet {
  PROPP_ALPHABET_AUTO = 0,
  PROPP_ALPHABET_BAND = 1,
  PROPP_ALPHABET_STANDARD = 2
} propp_alphabet;

typedef struct propp_options {
  /* 0 selects the default for either field. */
  size_t search_max_states; /* conjugacy search state budget */
  int search_max_length;    /* longest band word the search accepts */
} propp_options;

const char* propp_version(void);
const char* propp_status_name(propp_status status);
/* Message for the most recent failure on this thread. */
const char* propp_last_error(void);
void propp_string_free(char* s);

/* ---- braid words ---- */

propp_status propp_word_parse(const char* text, int strands,
                              propp_alphabet alphabet, propp_word** out);
void propp_word_free(propp_word* w);
propp_status propp_word_format(const propp_word* w, char** out);
int propp_word_length(const propp_word* w);
int propp_word_strands(const propp_word* w);
propp_status propp_word_component_count(const propp_word* w, int* out);

/* ---- invariants ---- */

/* Normalized Alexander polynomial rendering, e.g. "2*t - 3 + 2*t^-1". */
propp_status propp_alexander(const propp_word* w, char** out);
propp_status propp_casson_v2(const propp_word* w, long long* out);

/* ---- certification pipeline ---- */

/* Property P report as JSON (schema documented in the README). */
propp_status propp_analyze_json(const propp_word* w,
                                const propp_options* options, char** out);

/* Finite 3-braid case table as JSON. */
propp_status propp_enumerate_cases_json(int maxp, int maxn,
                                        const propp_options* options,
                                        char** out);

/* Full finite check: case table + word identities. *verdict_out = 1 when
 * every knot row with fewer than two Gabai disks is the trefoil or 5_2 and
 * all identities confirm. */
propp_status propp_verify_theorem4_json(int maxp, int maxn,
                                        const propp_options* options,
                                        int* verdict_out, char** out);

/* Scharlemann-Thompson two-of-three checks over random minimal band words. */
propp_status propp_st_check_random_json(unsigned long long seed, int count,
                                        int min_len, int max_len,
                                        const propp_options* options,
                                        int* verdict_out, char** out);

/* Exhaustive Scharlemann-Thompson check over words of length <= max_len. */
propp_status propp_st_check_exhaustive_json(int max_len,
                                            const propp_options* options,
                                            int* verdict_out, char** out);

/* Twist-family quadratic check: v2 along odd half-twist insertions must fit
 * a quadratic with leading coefficient 1/8. The generator is named in the
 * word grammar ("a12" or "s1"). */
propp_status propp_family_check_json(const propp_word* template_word,
                                     size_t insert_pos, const char* generator,
                                     const int* fit_samples, size_t n_fit,
                                     const int* holdout_samples,
                                     size_t n_holdout, int* verdict_out,
                                     char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PROPP_H */
