/*
 * C interface to the nefcone library.
 *
 * Every function returns an nc_status. On failure the output pointer is
 * left untouched and nc_last_error() describes the problem for the calling
 * thread. Strings handed out by the library are released with
 * nc_string_free; handles are released with their matching *_free call.
 * Rationals cross the boundary as "p/q" or integer text.
 */
#ifndef NEFCONE_NEFCONE_H
#define NEFCONE_NEFCONE_H

#include <stddef.h>

#if defined(_WIN32)
#define NC_API __declspec(dllexport)
#else
#define NC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nc_status {
  NC_OK = 0,
  NC_ERR_UNSTABLE_SIGNATURE,
  NC_ERR_DUPLICATE_LABEL,
  NC_ERR_INVALID_PAIR,
  NC_ERR_SIGNATURE_MISMATCH,
  NC_ERR_WRONG_HOME_SPACE,
  NC_ERR_UNSUPPORTED_BASIS_ELEMENT,
  NC_ERR_GENUS_TOO_SMALL,
  NC_ERR_SPEC_MISMATCH,
  NC_ERR_NOT_IN_SPAN,
  NC_ERR_DEPENDENT_GENERATORS,
  NC_ERR_BAD_SPLIT,
  NC_ERR_DIMENSION_TOO_LARGE,
  NC_ERR_NEGATIVE_SEED,
  NC_ERR_SYNTAX,
  NC_ERR_UNKNOWN_ATOM,
  NC_ERR_WRONG_SIGNATURE,
  NC_ERR_INVALID_ARGUMENT,
  NC_ERR_NULL_ARGUMENT,
  NC_ERR_INTERNAL
} nc_status;

typedef enum nc_system_variant {
  NC_SYSTEM_THEOREM = 0,
  NC_SYSTEM_PROOF = 1,
  NC_SYSTEM_PROOF_WITH_SIGNS = 2
} nc_system_variant;

typedef enum nc_decision { NC_MEMBER = 0, NC_NOT_MEMBER = 1 } nc_decision;

typedef struct nc_signature nc_signature;
typedef struct nc_divisor nc_divisor;
typedef struct nc_verdict nc_verdict;
typedef struct nc_hrep nc_hrep;
typedef struct nc_vrep nc_vrep;

NC_API const char* nc_status_name(nc_status status);
/* Message of the last failure on this thread; "" when there was none. */
NC_API const char* nc_last_error(void);
NC_API void nc_string_free(char* text);

/* Signatures (g, T). Labels need not be sorted but must be distinct. */
NC_API nc_status nc_signature_create(int genus, const int* labels, size_t label_count, nc_signature** out);
NC_API void nc_signature_free(nc_signature* sig);
NC_API nc_status nc_signature_to_string(const nc_signature* sig, char** out);

/* Divisor classes. */
NC_API nc_status nc_divisor_parse(const nc_signature* sig, const char* text, nc_divisor** out);
NC_API nc_status nc_divisor_theta(const nc_signature* sig, const int* L, size_t L_count, nc_divisor** out);
NC_API nc_status nc_divisor_named(const nc_signature* sig, const char* name, nc_divisor** out);
NC_API nc_status nc_divisor_to_string(const nc_divisor* d, char** out);
NC_API nc_status nc_divisor_equal(const nc_divisor* lhs, const nc_divisor* rhs, int* out);
NC_API void nc_divisor_free(nc_divisor* d);

/* Nef over the one-node locus. nc_membership takes a class on (g, {}),
 * nc_membership_mu takes "a,b_irr,b_1,..". */
NC_API nc_status nc_membership(const nc_divisor* d, nc_verdict** out);
NC_API nc_status nc_membership_mu(int genus, const char* coordinates, nc_verdict** out);
NC_API nc_status nc_verdict_decision(const nc_verdict* v, nc_decision* out);
NC_API nc_status nc_verdict_to_text(const nc_verdict* v, char** out);
NC_API nc_status nc_verdict_to_json(const nc_verdict* v, char** out);
NC_API void nc_verdict_free(nc_verdict* v);

/* Inequality systems over (a, b_irr, b_1..) and cone slices. */
NC_API nc_status nc_system(int genus, nc_system_variant variant, nc_hrep** out);
NC_API nc_status nc_hrep_size(const nc_hrep* h, size_t* out);
NC_API nc_status nc_hrep_to_text(const nc_hrep* h, char** out);
NC_API nc_status nc_hrep_to_json(const nc_hrep* h, char** out);
NC_API void nc_hrep_free(nc_hrep* h);

NC_API nc_status nc_slice(int genus, nc_vrep** out);
NC_API nc_status nc_vrep_vertex_count(const nc_vrep* v, size_t* out);
NC_API nc_status nc_vrep_to_text(const nc_vrep* v, char** out);
NC_API nc_status nc_vrep_to_json(const nc_vrep* v, char** out);
NC_API void nc_vrep_free(nc_vrep* v);

/* Pullbacks of a class on (g, {}) with closed-form comparison. */
NC_API nc_status nc_pullback_beta(const nc_divisor* d, char** report);
NC_API nc_status nc_pullback_alpha(const nc_divisor* d, int s, int t, char** report);

/* Generator walk from b_irr ("p/q"), with optional random samples. */
NC_API nc_status nc_walk(int genus, const char* seed_birr, unsigned samples, unsigned rng_seed, char** report);

/* Regression table; *all_ok is 1 when no row failed. */
NC_API nc_status nc_verify(char** report, int* all_ok);

#ifdef __cplusplus
}
#endif

#endif
