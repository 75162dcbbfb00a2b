#ifndef BRACE_DEND_H
#define BRACE_DEND_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum BdStatus {
  BD_STATUS_OK = 0,
  BD_STATUS_NULL_POINTER = 1,
  BD_STATUS_INVALID_UTF8 = 2,
  BD_STATUS_PARSE = 3,
  BD_STATUS_INVALID_BRACE = 4,
  BD_STATUS_DEGREE_OVERFLOW = 5,
  BD_STATUS_UNKNOWN_SUITE = 6,
  BD_STATUS_DOMAIN = 7,
  BD_STATUS_PANIC = 8,
} BdStatus;

typedef enum BdSpecies {
  BD_SPECIES_APE = 0,
  BD_SPECIES_PRELIE = 1,
} BdSpecies;

/*
 A brace structure read from JSON.
 */
typedef struct BdBrace BdBrace;

/*
 An element of the free dendriform algebra together with the names of its
 generators.
 */
typedef struct BdElement BdElement;

/*
 A truncated envelope of a brace structure.
 */
typedef struct BdEnvelope BdEnvelope;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 The message of the last failure on this thread, or null. Owned by the
 library; valid until the next call on this thread.
 */
const char *bd_last_error(void);

void bd_string_free(char *s);

/*
 Parses a dendriform expression such as `a<(b>c)` over `gens` letters.
 */
enum BdStatus bd_element_parse(const char *expr, size_t gens, struct BdElement **out);

void bd_element_free(struct BdElement *e);

/*
 The element as a sum of products, e.g. `a<b - b>a`.
 */
enum BdStatus bd_element_to_string(const struct BdElement *e, char **out);

/*
 The element as a sum of bracketed planar binary trees.
 */
enum BdStatus bd_element_to_bracket(const struct BdElement *e, char **out);

enum BdStatus bd_element_num_terms(const struct BdElement *e, size_t *out);

enum BdStatus bd_element_prec(const struct BdElement *a,
                              const struct BdElement *b,
                              struct BdElement **out);

enum BdStatus bd_element_succ(const struct BdElement *a,
                              const struct BdElement *b,
                              struct BdElement **out);

enum BdStatus bd_element_star(const struct BdElement *a,
                              const struct BdElement *b,
                              struct BdElement **out);

/*
 The coproduct, written as `lhs (x) rhs` terms.
 */
enum BdStatus bd_element_coproduct(const struct BdElement *e, char **out);

enum BdStatus bd_element_is_primitive(const struct BdElement *e, bool *out);

/*
 Dimension of the primitives of degree `degree` on `gens` generators.
 */
enum BdStatus bd_primitive_dim(size_t degree, size_t gens, size_t *out);

/*
 Composes `inner` into `outer` at the vertex labeled `at` and writes the
 resulting sum of trees.
 */
enum BdStatus bd_compose(enum BdSpecies species,
                         const char *outer,
                         const char *inner,
                         const char *at,
                         char **out);

/*
 Runs a named verification suite; writes the number of checks and defects.
 */
enum BdStatus bd_verify(const char *suite, size_t bound, size_t *checks, size_t *defects);

enum BdStatus bd_brace_from_json(const char *json, struct BdBrace **out);

void bd_brace_free(struct BdBrace *b);

enum BdStatus bd_brace_dim(const struct BdBrace *b, size_t *out);

/*
 Number of failing brace relations with arguments of arity `<= arity`.
 */
enum BdStatus bd_brace_validate(const struct BdBrace *b, size_t arity, size_t *defects);

/*
 Builds the envelope truncated at weight `upto`.
 */
enum BdStatus bd_envelope_build(const struct BdBrace *b,
                                size_t upto,
                                size_t slack,
                                struct BdEnvelope **out);

void bd_envelope_free(struct BdEnvelope *q);

/*
 Copies up to `cap` dimensions (weights `0..=upto`) into `dims` and writes
 the total count to `len`. Pass `dims = NULL` to query the count.
 */
enum BdStatus bd_envelope_dims(const struct BdEnvelope *q, size_t *dims, size_t cap, size_t *len);

enum BdStatus bd_envelope_stable(const struct BdEnvelope *q, bool *out);

/*
 Whether the primitives of the envelope are exactly the generators.
 */
enum BdStatus bd_envelope_primitives_ok(const struct BdEnvelope *q, bool *out);

/*
 Parses `expr` over the basis names of the brace structure and writes its
 normal form in the envelope.
 */
enum BdStatus bd_envelope_reduce(const struct BdEnvelope *q,
                                 const char *expr,
                                 struct BdElement **out);

/*
 Library version as a static string.
 */
const char *bd_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BRACE_DEND_H */
