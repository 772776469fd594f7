/* Exercises the C API from C: handles, status codes, errors and JSON output. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "algmat/algmat.h"

static int failures = 0;

#define EXPECT(cond)                                                  \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                     \
    }                                                                 \
  } while (0)

static const char* det_text =
    "field QQ\n"
    "vars x00 x01 x10 x11\n"
    "prime\n"
    "gens\n"
    "  x00*x11 - x01*x10\n"
    "end\n"
    "param p0 p1 q0 q1\n"
    "map\n"
    "  p0*q0\n  p0*q1\n  p1*q0\n  p1*q1\n"
    "end\n";

static int contains(const char* hay, const char* needle) { return hay && strstr(hay, needle) != NULL; }

static void test_errors(void) {
  algmat_problem* p = NULL;
  EXPECT(algmat_problem_parse("field QQ\nvars x\ngens\n  x +* 1\nend\n", &p) == ALGMAT_E_SYNTAX);
  EXPECT(p == NULL);
  EXPECT(algmat_last_error_line() == 4);
  EXPECT(algmat_last_error_column() == 6);
  EXPECT(strcmp(algmat_status_name(ALGMAT_E_SYNTAX), "SyntaxError") == 0);
  EXPECT(algmat_problem_parse("field GF(4)[t]/(t^2+t+1)\nvars x\n", &p) == ALGMAT_E_UNKNOWN_FIELD);
  EXPECT(algmat_problem_parse("field QQ\nvars x x\n", &p) == ALGMAT_E_DUPLICATE_VARIABLE);
  EXPECT(algmat_problem_load("/nonexistent/file.ideal", &p) == ALGMAT_E_IO);
  EXPECT(algmat_problem_parse(NULL, &p) == ALGMAT_E_NULL_ARGUMENT);
  EXPECT(strlen(algmat_last_error()) > 0);
  EXPECT(algmat_status_is_math_failure(ALGMAT_E_NO_VALID_POINT));
  EXPECT(!algmat_status_is_math_failure(ALGMAT_E_SYNTAX));
  EXPECT(strcmp(algmat_status_name(ALGMAT_E_NO_VALID_POINT), "NoValidPoint") == 0);

  algmat_options* o = NULL;
  EXPECT(algmat_options_new(&o) == ALGMAT_OK);
  EXPECT(algmat_options_set_order(o, "deglex") == ALGMAT_E_INVALID_ARGUMENT);
  EXPECT(algmat_options_set_jobs(o, 0) == ALGMAT_E_INVALID_ARGUMENT);
  algmat_options_free(o);

  /* Not prime: algebraic matroids are refused. */
  EXPECT(algmat_problem_parse("field QQ\nvars x y\ngens\n  x*y\nend\n", &p) == ALGMAT_OK);
  algmat_matroid* m = NULL;
  EXPECT(algmat_algebraic_matroid(p, NULL, &m) == ALGMAT_E_PRIMALITY_NOT_ASSERTED);
  EXPECT(m == NULL);
  algmat_problem_free(p);
}

static void test_det(void) {
  algmat_problem* p = NULL;
  algmat_options* o = NULL;
  EXPECT(algmat_problem_parse(det_text, &p) == ALGMAT_OK);
  EXPECT(algmat_options_new(&o) == ALGMAT_OK);
  EXPECT(algmat_options_set_jobs(o, 2) == ALGMAT_OK);

  int has = 0;
  EXPECT(algmat_problem_has_param(p, &has) == ALGMAT_OK && has == 1);

  char* digest = NULL;
  EXPECT(algmat_problem_digest(p, &digest) == ALGMAT_OK);
  EXPECT(digest && strlen(digest) == 16);
  algmat_string_free(digest);

  algmat_matroid* alg = NULL;
  algmat_matroid* dif = NULL;
  EXPECT(algmat_algebraic_matroid(p, o, &alg) == ALGMAT_OK);
  EXPECT(algmat_differential_matroid(p, o, &dif) == ALGMAT_OK);
  size_t n = 0, r = 0;
  EXPECT(algmat_matroid_size(alg, &n) == ALGMAT_OK && n == 4);
  EXPECT(algmat_matroid_rank(alg, &r) == ALGMAT_OK && r == 3);
  size_t three[3] = {0, 1, 2};
  size_t four[4] = {0, 1, 2, 3};
  size_t bad[1] = {7};
  int ind = -1;
  EXPECT(algmat_matroid_is_independent(alg, three, 3, &ind) == ALGMAT_OK && ind == 1);
  EXPECT(algmat_matroid_is_independent(alg, four, 4, &ind) == ALGMAT_OK && ind == 0);
  EXPECT(algmat_matroid_is_independent(alg, bad, 1, &ind) == ALGMAT_E_INDEX_OUT_OF_RANGE);

  int eq = 0;
  EXPECT(algmat_matroid_equal(alg, dif, &eq) == ALGMAT_OK && eq == 1);
  char* perm = NULL;
  EXPECT(algmat_matroid_isomorphic(alg, dif, &eq, &perm) == ALGMAT_OK && eq == 1);
  EXPECT(contains(perm, "["));
  algmat_string_free(perm);

  char* js = NULL;
  EXPECT(algmat_matroid_json(alg, &js) == ALGMAT_OK);
  EXPECT(contains(js, "\"schema\": 1"));
  EXPECT(contains(js, "\"rank\": 3"));
  algmat_string_free(js);

  EXPECT(algmat_jacobian_json(p, o, &js) == ALGMAT_OK);
  EXPECT(contains(js, "\"x11\""));
  EXPECT(contains(js, "\"-x10\""));
  algmat_string_free(js);

  EXPECT(algmat_specialize_json(p, o, "1/6,1/6,1/3,1/3", &js) == ALGMAT_OK);
  EXPECT(contains(js, "\"matches\": true"));
  algmat_string_free(js);
  EXPECT(algmat_specialize_json(p, o, "1,1,1,0", &js) == ALGMAT_OK);
  EXPECT(contains(js, "\"on_variety\": false"));
  algmat_string_free(js);
  EXPECT(algmat_specialize_json(p, o, "1,2", &js) != ALGMAT_OK);

  EXPECT(algmat_represent_json(p, o, "0,0,0,0", 0, &js) == ALGMAT_E_NO_VALID_POINT);
  EXPECT(algmat_represent_json(p, o, NULL, 5, &js) == ALGMAT_OK);
  EXPECT(contains(js, "\"candidate_index\""));
  algmat_string_free(js);

  EXPECT(algmat_sample_json(p, o, &js) == ALGMAT_OK);
  EXPECT(contains(js, "\"on_variety\": true"));
  algmat_string_free(js);

  EXPECT(algmat_implicitize_json(p, o, &js) == ALGMAT_OK);
  EXPECT(contains(js, "\"equals_gens\": true"));
  algmat_string_free(js);

  uint64_t zero = 0;
  EXPECT(algmat_flock_json(p, o, &zero, 1, &zero, 1, &js) == ALGMAT_E_CHAR_ZERO_FIELD);

  EXPECT(algmat_options_counters_json(o, &js) == ALGMAT_OK);
  EXPECT(contains(js, "gb_runs"));
  algmat_string_free(js);

  algmat_matroid_free(alg);
  algmat_matroid_free(dif);
  algmat_options_free(o);
  algmat_problem_free(p);
}

static void test_flock(void) {
  algmat_problem* p = NULL;
  EXPECT(algmat_problem_parse("field GF(3)\nvars x y z\nprime\ngens\n  x^3 + x^6*y - z\nend\n", &p) == ALGMAT_OK);
  uint64_t a[3] = {1, 0, 0};
  uint64_t b[1] = {0};
  char* js = NULL;
  EXPECT(algmat_flock_json(p, NULL, a, 3, b, 1, &js) == ALGMAT_OK);
  EXPECT(contains(js, "x^2*y + x - z"));
  EXPECT(contains(js, "\"algebraic_isomorphic\": true"));
  algmat_string_free(js);
  uint64_t both[1] = {1};
  EXPECT(algmat_flock_json(p, NULL, both, 1, both, 1, &js) == ALGMAT_E_SHIFT_PAIR_NONZERO);
  EXPECT(algmat_flock_json(p, NULL, a, 2, b, 1, &js) == ALGMAT_E_INVALID_ARGUMENT);

  algmat_matroid* alg = NULL;
  algmat_matroid* dif = NULL;
  EXPECT(algmat_algebraic_matroid(p, NULL, &alg) == ALGMAT_OK);
  EXPECT(algmat_differential_matroid(p, NULL, &dif) == ALGMAT_OK);
  EXPECT(algmat_matroid_compare_json(alg, dif, &js) == ALGMAT_OK);
  EXPECT(contains(js, "\"equal\": false"));
  algmat_string_free(js);
  algmat_matroid_free(alg);
  algmat_matroid_free(dif);
  algmat_problem_free(p);
}

int main(void) {
  EXPECT(strlen(algmat_version()) > 0);
  test_errors();
  test_det();
  test_flock();
  if (failures) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return 1;
  }
  printf("C API tests passed\n");
  return 0;
}
