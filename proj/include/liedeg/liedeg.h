#ifndef LIEDEG_H
#define LIEDEG_H

/* C interface to liedeg.
 *
 * Algebras are opaque handles. Every call returns a status code; on failure
 * liedeg_last_error() describes the problem (thread-local, valid until the
 * next call on the same thread). Strings returned through char** are
 * allocated by the library and released with liedeg_string_free().
 *
 * Structured results are JSON documents; the law, witness and deformation
 * formats are the ones documented in README.md. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define LIEDEG_API __declspec(dllexport)
#else
#define LIEDEG_API __attribute__((visibility("default")))
#endif

typedef enum liedeg_status {
  LIEDEG_OK = 0,
  LIEDEG_ERR_PARSE = 1,       /* malformed text, JSON or scalar */
  LIEDEG_ERR_INVALID = 2,     /* bad argument: singular matrix, wrong dimension, not a Lie law */
  LIEDEG_ERR_NOT_FOUND = 3,   /* unknown catalog name */
  LIEDEG_ERR_DOMAIN = 4,      /* well-formed request with a negative mathematical answer */
  LIEDEG_ERR_INTERNAL = 5
} liedeg_status;

typedef struct liedeg_algebra liedeg_algebra;

LIEDEG_API const char* liedeg_version(void);
LIEDEG_API const char* liedeg_last_error(void);
LIEDEG_API void liedeg_string_free(char* s);

/* Construction. The text form is the .lie format; json is the law format. */
LIEDEG_API liedeg_status liedeg_algebra_from_catalog(const char* ref, liedeg_algebra** out);
LIEDEG_API liedeg_status liedeg_algebra_parse(const char* text, liedeg_algebra** out);
/* Like liedeg_algebra_parse but skips the Jacobi check, for validation. */
LIEDEG_API liedeg_status liedeg_algebra_parse_unchecked(const char* text, liedeg_algebra** out);
LIEDEG_API liedeg_status liedeg_algebra_from_json(const char* json, liedeg_algebra** out);
LIEDEG_API void liedeg_algebra_free(liedeg_algebra* a);

LIEDEG_API size_t liedeg_algebra_dim(const liedeg_algebra* a);
/* Name given in the .lie header or the catalog reference. */
LIEDEG_API const char* liedeg_algebra_name(const liedeg_algebra* a);
LIEDEG_API liedeg_status liedeg_algebra_to_json(const liedeg_algebra* a, char** out);
LIEDEG_API liedeg_status liedeg_algebra_to_text(const liedeg_algebra* a, char** out);

/* Laws read from JSON are not checked; this reports antisymmetry or Jacobi
 * failures. *ok is 1 for a Lie law. */
LIEDEG_API liedeg_status liedeg_validate(const liedeg_algebra* a, int* ok, char** json);

LIEDEG_API liedeg_status liedeg_profile(const liedeg_algebra* a, char** json);

/* convention: "action", "new-basis" or NULL to use the one in the witness
 * document (default "action"). When order > 0 and the limit exists, the
 * induced deformation up to t^order and its Jacobi defects are included.
 * *has_limit is 1 when the limit exists. */
LIEDEG_API liedeg_status liedeg_contract(const liedeg_algebra* a, const char* witness_json, const char* convention,
                                         int order, int* has_limit, char** json);

/* subspace_json: array of vectors spanning a subalgebra. */
LIEDEG_API liedeg_status liedeg_iw_contract(const liedeg_algebra* a, const char* subspace_json, int order,
                                            char** json);

/* phi_json: square matrix of Laurent polynomials, the new basis as columns. */
LIEDEG_API liedeg_status liedeg_endo_contract(const liedeg_algebra* a, const char* phi_json, char** json);

/* *verdict: 0 Consistent, 1 Obstructed. */
LIEDEG_API liedeg_status liedeg_obstruct(const liedeg_algebra* source, const liedeg_algebra* target, int* verdict,
                                         char** json);

/* *verified is 1 when the witness certifies source -> target; a failed
 * certificate is LIEDEG_OK with *verified 0 and the reason in the JSON. */
LIEDEG_API liedeg_status liedeg_verify(const liedeg_algebra* source, const liedeg_algebra* target,
                                       const char* witness_json, const char* convention, int* verified, char** json);

/* catalog: "dim2" or "dim3". format: "json" or "dot". */
LIEDEG_API liedeg_status liedeg_hasse(const char* catalog, const char* format, char** out);

/* Deformation document {"base": law, "terms": [law, ...]}. order > 0
 * truncates to the first order terms. *consistent is 1 when every Jacobi
 * defect vanishes. */
LIEDEG_API liedeg_status liedeg_deform_check(const char* deformation_json, int order, int* consistent, char** json);

LIEDEG_API liedeg_status liedeg_rigidity(const liedeg_algebra* a, char** json);

LIEDEG_API liedeg_status liedeg_catalog_list(char** json);

#ifdef __cplusplus
}
#endif

#endif
