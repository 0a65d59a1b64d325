/* Exercises the shared library through its C header only. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "nefcone/nefcone.h"

static int failures = 0;

#define EXPECT(cond)                                                  \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                     \
    }                                                                 \
  } while (0)

static int contains(const char* text, const char* needle) { return text && strstr(text, needle) != NULL; }

static void test_signatures(void) {
  nc_signature* sig = NULL;
  const int labels[] = {2, 1};
  EXPECT(nc_signature_create(3, labels, 2, &sig) == NC_OK);
  char* text = NULL;
  EXPECT(nc_signature_to_string(sig, &text) == NC_OK);
  EXPECT(text && strcmp(text, "(3,[1,2])") == 0);
  nc_string_free(text);
  nc_signature_free(sig);

  nc_signature* bad = NULL;
  EXPECT(nc_signature_create(1, NULL, 0, &bad) == NC_ERR_UNSTABLE_SIGNATURE);
  EXPECT(bad == NULL);
  EXPECT(contains(nc_last_error(), "unstable"));
  const int dup[] = {1, 1};
  EXPECT(nc_signature_create(2, dup, 2, &bad) == NC_ERR_DUPLICATE_LABEL);
  EXPECT(nc_signature_create(2, NULL, 0, NULL) == NC_ERR_NULL_ARGUMENT);
  EXPECT(strcmp(nc_status_name(NC_OK), "ok") == 0);
  EXPECT(strcmp(nc_status_name(NC_ERR_SYNTAX), "SyntaxError") == 0);
  EXPECT(strcmp(nc_status_name(NC_ERR_NULL_ARGUMENT), "NullArgument") == 0);
}

static void test_divisors(void) {
  nc_signature* m4 = NULL;
  EXPECT(nc_signature_create(4, NULL, 0, &m4) == NC_OK);
  nc_divisor* mu = NULL;
  nc_divisor* spelled = NULL;
  EXPECT(nc_divisor_named(m4, "mu", &mu) == NC_OK);
  EXPECT(nc_divisor_parse(m4, "36*lambda - 4*dirr - 12*d1 - 16*d2", &spelled) == NC_OK);
  int equal = 0;
  EXPECT(nc_divisor_equal(mu, spelled, &equal) == NC_OK);
  EXPECT(equal == 1);
  char* text = NULL;
  EXPECT(nc_divisor_to_string(mu, &text) == NC_OK);
  EXPECT(text && strcmp(text, "36*lambda - 4*dirr - 12*d1 - 16*d2") == 0);
  nc_string_free(text);

  nc_divisor* junk = NULL;
  EXPECT(nc_divisor_parse(m4, "lambda +", &junk) == NC_ERR_SYNTAX);
  EXPECT(contains(nc_last_error(), "at offset 8"));
  EXPECT(nc_divisor_parse(m4, "psi1", &junk) == NC_ERR_UNKNOWN_ATOM);
  EXPECT(nc_divisor_named(m4, "theta1", &junk) == NC_ERR_WRONG_HOME_SPACE);
  EXPECT(nc_divisor_parse(m4, "theta1", &junk) == NC_ERR_WRONG_SIGNATURE);
  EXPECT(nc_divisor_named(m4, "nonsense", &junk) == NC_ERR_UNKNOWN_ATOM);
  EXPECT(junk == NULL);

  nc_signature* two = NULL;
  const int labels[] = {1, 2};
  EXPECT(nc_signature_create(2, labels, 2, &two) == NC_OK);
  nc_divisor* th = NULL;
  nc_divisor* th_named = NULL;
  EXPECT(nc_divisor_theta(two, labels, 2, &th) == NC_OK);
  EXPECT(nc_divisor_parse(two, "4*theta12", &th_named) == NC_OK);
  EXPECT(nc_divisor_equal(th, th_named, &equal) == NC_OK);
  EXPECT(equal == 1);
  /* classes on different spaces are simply different */
  EXPECT(nc_divisor_equal(th, mu, &equal) == NC_OK);
  EXPECT(equal == 0);

  nc_divisor_free(th);
  nc_divisor_free(th_named);
  nc_divisor_free(mu);
  nc_divisor_free(spelled);
  nc_signature_free(two);
  nc_signature_free(m4);
  nc_divisor_free(NULL);
}

static void test_membership(void) {
  nc_signature* m3 = NULL;
  EXPECT(nc_signature_create(3, NULL, 0, &m3) == NC_OK);
  nc_divisor* d = NULL;
  EXPECT(nc_divisor_parse(m3, "lambda - 1/9*dirr - 1/3*d1", &d) == NC_OK);
  nc_verdict* v = NULL;
  EXPECT(nc_membership(d, &v) == NC_OK);
  nc_decision decision = NC_MEMBER;
  EXPECT(nc_verdict_decision(v, &decision) == NC_OK);
  EXPECT(decision == NC_NOT_MEMBER);
  char* json = NULL;
  EXPECT(nc_verdict_to_json(v, &json) == NC_OK);
  EXPECT(contains(json, "\"decision\": \"NotMember\""));
  EXPECT(contains(json, "\"Bs_{1,0}\""));
  nc_string_free(json);
  nc_verdict_free(v);

  nc_verdict* mu = NULL;
  EXPECT(nc_membership_mu(5, "1,0,0,0", &mu) == NC_OK);
  EXPECT(nc_verdict_decision(mu, &decision) == NC_OK);
  EXPECT(decision == NC_MEMBER);
  char* text = NULL;
  EXPECT(nc_verdict_to_text(mu, &text) == NC_OK);
  EXPECT(contains(text, "violated: -"));
  nc_string_free(text);
  nc_verdict_free(mu);

  EXPECT(nc_membership_mu(2, "1,0,0", &mu) == NC_ERR_GENUS_TOO_SMALL);
  EXPECT(nc_membership_mu(5, "1,0", &mu) == NC_ERR_SYNTAX);
  nc_divisor_free(d);
  nc_signature_free(m3);
}

static void test_polyhedra(void) {
  nc_vrep* v = NULL;
  EXPECT(nc_slice(4, &v) == NC_OK);
  size_t count = 0;
  EXPECT(nc_vrep_vertex_count(v, &count) == NC_OK);
  EXPECT(count == 7);
  char* text = NULL;
  EXPECT(nc_vrep_to_text(v, &text) == NC_OK);
  EXPECT(contains(text, "V: 1/9 1/3 4/9\n"));
  nc_string_free(text);
  EXPECT(nc_vrep_to_json(v, &text) == NC_OK);
  EXPECT(contains(text, "\"vertices\""));
  nc_string_free(text);
  nc_vrep_free(v);

  nc_hrep* h = NULL;
  EXPECT(nc_system(4, NC_SYSTEM_THEOREM, &h) == NC_OK);
  EXPECT(nc_hrep_size(h, &count) == NC_OK);
  EXPECT(count == 6);
  EXPECT(nc_hrep_to_text(h, &text) == NC_OK);
  EXPECT(contains(text, "0 12 0 -1 0 >= 0"));
  nc_string_free(text);
  nc_hrep_free(h);
  EXPECT(nc_system(5, NC_SYSTEM_PROOF_WITH_SIGNS, &h) == NC_OK);
  EXPECT(nc_hrep_to_json(h, &text) == NC_OK);
  EXPECT(contains(text, "nonneg_birr"));
  nc_string_free(text);
  nc_hrep_free(h);
  EXPECT(nc_system(2, NC_SYSTEM_THEOREM, &h) == NC_ERR_GENUS_TOO_SMALL);
  EXPECT(nc_system(4, (nc_system_variant)9, &h) == NC_ERR_INVALID_ARGUMENT);
}

static void test_reports(void) {
  nc_signature* m4 = NULL;
  EXPECT(nc_signature_create(4, NULL, 0, &m4) == NC_OK);
  nc_divisor* mu = NULL;
  EXPECT(nc_divisor_named(m4, "mu", &mu) == NC_OK);
  char* report = NULL;
  EXPECT(nc_pullback_beta(mu, &report) == NC_OK);
  EXPECT(contains(report, "closed form matches: yes"));
  nc_string_free(report);
  EXPECT(nc_pullback_alpha(mu, 2, 2, &report) == NC_OK);
  EXPECT(contains(report, "closed form matches: yes"));
  nc_string_free(report);
  EXPECT(nc_pullback_alpha(mu, 1, 2, &report) == NC_ERR_BAD_SPLIT);
  nc_divisor_free(mu);
  nc_signature_free(m4);

  EXPECT(nc_walk(4, "7/2", 3, 11, &report) == NC_OK);
  EXPECT(contains(report, "sample 3: "));
  nc_string_free(report);
  EXPECT(nc_walk(4, "-1", 0, 1, &report) == NC_ERR_NEGATIVE_SEED);
  EXPECT(nc_walk(4, "1/0", 0, 1, &report) == NC_ERR_SYNTAX);

  int ok = 0;
  EXPECT(nc_verify(&report, &ok) == NC_OK);
  EXPECT(ok == 1);
  EXPECT(contains(report, "EXPECTED-DEVIATION"));
  nc_string_free(report);
}

int main(void) {
  test_signatures();
  test_divisors();
  test_membership();
  test_polyhedra();
  test_reports();
  if (failures) {
    fprintf(stderr, "%d C API check(s) failed\n", failures);
    return EXIT_FAILURE;
  }
  puts("C API checks passed");
  return EXIT_SUCCESS;
}
