#ifndef ALGMAT_ALGMAT_H
#define ALGMAT_ALGMAT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define ALGMAT_API __attribute__((visibility("default")))
#else
#define ALGMAT_API
#endif

/* Status codes. Values 1..99 mirror the library's error kinds. */
typedef enum algmat_status {
  ALGMAT_OK = 0,
  ALGMAT_E_DIVISION_BY_ZERO = 1,
  ALGMAT_E_FIELD_MISMATCH = 2,
  ALGMAT_E_CHAR_ZERO_FIELD = 3,
  ALGMAT_E_DEGREE_TOO_LARGE = 4,
  ALGMAT_E_MODULUS_TOO_LARGE = 5,
  ALGMAT_E_INVALID_FIELD = 6,
  ALGMAT_E_UNKNOWN_FIELD = 7,
  ALGMAT_E_SYNTAX = 8,
  ALGMAT_E_UNKNOWN_VARIABLE = 9,
  ALGMAT_E_DUPLICATE_VARIABLE = 10,
  ALGMAT_E_RING_MISMATCH = 11,
  ALGMAT_E_NAME_COLLISION = 12,
  ALGMAT_E_EXPONENT_OVERFLOW = 13,
  ALGMAT_E_RESOURCE_LIMIT = 14,
  ALGMAT_E_CONTEXT_MISMATCH = 15,
  ALGMAT_E_INDEX_OUT_OF_RANGE = 16,
  ALGMAT_E_DENOMINATOR_VANISHES = 17,
  ALGMAT_E_NOT_ON_VARIETY = 18,
  ALGMAT_E_NO_VALID_POINT = 19,
  ALGMAT_E_GROUND_SET_TOO_LARGE = 20,
  ALGMAT_E_GROUND_SET_MISMATCH = 21,
  ALGMAT_E_SHIFT_PAIR_NONZERO = 22,
  ALGMAT_E_PRIMALITY_NOT_ASSERTED = 23,
  ALGMAT_E_NOT_A_MATROID = 24,
  ALGMAT_E_INVALID_ARGUMENT = 25,
  ALGMAT_E_INTERNAL = 26,
  ALGMAT_E_NULL_ARGUMENT = 100,
  ALGMAT_E_IO = 101,
  ALGMAT_E_OUT_OF_MEMORY = 102
} algmat_status;

typedef struct algmat_options algmat_options;
typedef struct algmat_problem algmat_problem;
typedef struct algmat_matroid algmat_matroid;

ALGMAT_API const char* algmat_version(void);
/* Stable name such as "NoValidPoint"; never NULL. */
ALGMAT_API const char* algmat_status_name(algmat_status s);
/* Message of the last failing call on this thread; "" after success. */
ALGMAT_API const char* algmat_last_error(void);
/* Line and column of the last syntax error on this thread, 0 when unknown. */
ALGMAT_API size_t algmat_last_error_line(void);
ALGMAT_API size_t algmat_last_error_column(void);
/* Nonzero for failures of the mathematics (as opposed to input or usage). */
ALGMAT_API int algmat_status_is_math_failure(algmat_status s);

/* Strings returned through char** are owned by the caller. */
ALGMAT_API void algmat_string_free(char* s);

/* Options: jobs=1, max_pairs=100000, max_exponent=2^20, order=grevlex,
 * seed=1, bound=100, reduced-GB cross-check off, ground cap 16. */
ALGMAT_API algmat_status algmat_options_new(algmat_options** out);
ALGMAT_API void algmat_options_free(algmat_options* o);
ALGMAT_API algmat_status algmat_options_set_jobs(algmat_options* o, unsigned jobs);
ALGMAT_API algmat_status algmat_options_set_max_pairs(algmat_options* o, uint64_t max_pairs);
ALGMAT_API algmat_status algmat_options_set_max_exponent(algmat_options* o, uint64_t max_exponent);
/* "lex" or "grevlex". */
ALGMAT_API algmat_status algmat_options_set_order(algmat_options* o, const char* order);
ALGMAT_API algmat_status algmat_options_set_seed(algmat_options* o, uint64_t seed);
ALGMAT_API algmat_status algmat_options_set_bound(algmat_options* o, uint64_t bound);
ALGMAT_API algmat_status algmat_options_set_reduced_gb_check(algmat_options* o, int enabled);
ALGMAT_API algmat_status algmat_options_set_max_ground(algmat_options* o, size_t max_ground);
/* JSON object with Groebner-basis counters accumulated by calls using o. */
ALGMAT_API algmat_status algmat_options_counters_json(const algmat_options* o, char** out);

/* Ideal files. */
ALGMAT_API algmat_status algmat_problem_parse(const char* text, algmat_problem** out);
ALGMAT_API algmat_status algmat_problem_load(const char* path, algmat_problem** out);
ALGMAT_API void algmat_problem_free(algmat_problem* p);
ALGMAT_API algmat_status algmat_problem_normalized(const algmat_problem* p, char** out);
/* FNV-1a digest of the normalized text, 16 hex digits. */
ALGMAT_API algmat_status algmat_problem_digest(const algmat_problem* p, char** out);
ALGMAT_API algmat_status algmat_problem_has_param(const algmat_problem* p, int* out);
ALGMAT_API algmat_status algmat_problem_ideal_json(const algmat_problem* p, const algmat_options* o, char** out);
/* {"passed": bool, "results": [{assertion, line, passed, observed}]} */
ALGMAT_API algmat_status algmat_problem_check_json(const algmat_problem* p, const algmat_options* o, char** out);

/* Matroids. */
ALGMAT_API algmat_status algmat_algebraic_matroid(const algmat_problem* p, const algmat_options* o,
                                                  algmat_matroid** out);
ALGMAT_API algmat_status algmat_differential_matroid(const algmat_problem* p, const algmat_options* o,
                                                     algmat_matroid** out);
ALGMAT_API void algmat_matroid_free(algmat_matroid* m);
ALGMAT_API algmat_status algmat_matroid_size(const algmat_matroid* m, size_t* out);
ALGMAT_API algmat_status algmat_matroid_rank(const algmat_matroid* m, size_t* out);
/* idx holds 0-based element indices. */
ALGMAT_API algmat_status algmat_matroid_is_independent(const algmat_matroid* m, const size_t* idx, size_t count,
                                                       int* out);
ALGMAT_API algmat_status algmat_matroid_json(const algmat_matroid* m, char** out);
ALGMAT_API algmat_status algmat_matroid_equal(const algmat_matroid* a, const algmat_matroid* b, int* out);
/* *out is 1 and *perm_json a JSON array (element i of a -> perm[i] of b) when
 * isomorphic; *perm_json is NULL otherwise. perm_json may be NULL. */
ALGMAT_API algmat_status algmat_matroid_isomorphic(const algmat_matroid* a, const algmat_matroid* b, int* out,
                                                   char** perm_json);
/* {"equal", "isomorphic", "distinguishing_sets"} */
ALGMAT_API algmat_status algmat_matroid_compare_json(const algmat_matroid* a, const algmat_matroid* b, char** out);

/* Constructions, all returning JSON documents with "schema": 1. */
ALGMAT_API algmat_status algmat_jacobian_json(const algmat_problem* p, const algmat_options* o, char** out);
ALGMAT_API algmat_status algmat_differential_json(const algmat_problem* p, const algmat_options* o, char** out);
/* point: comma-separated scalars in field-literal syntax, or NULL to sample
 * one from the parameterization with the options' seed and bound. */
ALGMAT_API algmat_status algmat_specialize_json(const algmat_problem* p, const algmat_options* o, const char* point,
                                                char** out);
/* Characteristic-zero representation. point as above; with NULL the
 * candidates are the parameterization samples for seeds seed..seed+count-1. */
ALGMAT_API algmat_status algmat_represent_json(const algmat_problem* p, const algmat_options* o, const char* point,
                                               size_t count, char** out);
ALGMAT_API algmat_status algmat_sample_json(const algmat_problem* p, const algmat_options* o, char** out);
ALGMAT_API algmat_status algmat_implicitize_json(const algmat_problem* p, const algmat_options* o, char** out);
/* a and b have one entry per variable, or a single entry used for all. */
ALGMAT_API algmat_status algmat_flock_json(const algmat_problem* p, const algmat_options* o, const uint64_t* a,
                                           size_t a_len, const uint64_t* b, size_t b_len, char** out);

#ifdef __cplusplus
}
#endif

#endif
