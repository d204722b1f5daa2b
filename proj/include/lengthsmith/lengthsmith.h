/*
 * C interface to the lengthsmith library.
 *
 * Objects are opaque handles created by *_create / *_load / *_realize and
 * released with the matching *_free. Every call returns an ls_status; on
 * failure ls_last_error() describes the problem (thread-local, valid until
 * the next failing call on the same thread). Structured results are returned
 * as canonical JSON strings owned by the caller and released with
 * ls_string_free. Rational bounds are passed as strings such as "3" or "7/2".
 */
#ifndef LENGTHSMITH_H
#define LENGTHSMITH_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LS_API __declspec(dllexport)
#else
#define LS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ls_status {
  LS_OK = 0,
  LS_ERR_INVALID_INPUT = 1,
  LS_ERR_EMPTY_SET,
  LS_ERR_GENERATOR_NOT_IN_N_GE_2,
  LS_ERR_DECOMPOSABLE_SINGLETON,
  LS_ERR_DUPLICATE_GENERATOR,
  LS_ERR_NOT_A_MEMBER,
  LS_ERR_NO_POSITIVE_GRADING,
  LS_ERR_NON_MINIMAL_GENERATING_SET,
  LS_ERR_ZERO_ATOM,
  LS_ERR_DUPLICATE_LABEL,
  LS_ERR_DIMENSION_MISMATCH,
  LS_ERR_NOT_AN_ELEMENT,
  LS_ERR_SET_NOT_IN_N_GE_2,
  LS_ERR_GROUP_TOO_LARGE,
  LS_ERR_NOT_ZERO_SUM,
  LS_ERR_ALPHABET_MISMATCH,
  LS_ERR_VERIFICATION_FAILURE,
  LS_ERR_OVERFLOW,
  LS_ERR_NULL_ARGUMENT = 100,
  LS_ERR_INTERNAL = 101
} ls_status;

typedef struct ls_family ls_family;
typedef struct ls_monoid ls_monoid;
typedef struct ls_group ls_group;

LS_API const char* ls_version(void);
LS_API const char* ls_last_error(void);
/* Stable name of a status code, e.g. "NotAnElement". */
LS_API const char* ls_status_name(ls_status status);
LS_API void ls_string_free(char* s);
/* 0 restores the default (hardware concurrency). */
LS_API void ls_set_thread_limit(unsigned limit);

/* Sets of lengths, given and returned as JSON arrays. */
LS_API ls_status ls_set_sumset(const char* a, const char* b, char** out);
LS_API ls_status ls_set_n_fold(const char* set, uint64_t n, char** out);
LS_API ls_status ls_set_dilate(const char* set, uint64_t n, char** out);
LS_API ls_status ls_set_delta(const char* set, char** out);

/* Families: {"generators": [[2,3],[2,5]]}. */
LS_API ls_status ls_family_create(const char* json, ls_family** out);
LS_API void ls_family_free(ls_family* family);
LS_API ls_status ls_family_to_json(const ls_family* family, char** out);
LS_API ls_status ls_family_enumerate(const ls_family* family, uint64_t bound,
                                     char** out);
/* Writes a witness object, or the JSON literal null when absent. */
LS_API ls_status ls_family_contains(const ls_family* family, const char* set,
                                    char** out);
LS_API ls_status ls_family_decompositions(const ls_family* family,
                                          const char* set, char** out);
LS_API ls_status ls_family_is_indecomposable(const ls_family* family,
                                             const char* set, int* out);

/* Monoids. */
LS_API ls_status ls_monoid_load(const char* json, ls_monoid** out);
LS_API ls_status ls_monoid_realize(const uint64_t* set, size_t count,
                                   ls_monoid** out);
LS_API ls_status ls_monoid_realize_family(const ls_family* family,
                                          ls_monoid** out);
LS_API void ls_monoid_free(ls_monoid* monoid);
LS_API ls_status ls_monoid_to_json(const ls_monoid* monoid, char** out);
LS_API ls_status ls_monoid_dim(const ls_monoid* monoid, size_t* out);
/* 1 when the monoid carries a recorded construction that verify can check. */
LS_API ls_status ls_monoid_is_realized(const ls_monoid* monoid, int* out);
/* Sum of counts[i] copies of the atom labels[i]; out has room for dim. */
LS_API ls_status ls_monoid_element_from_atoms(const ls_monoid* monoid,
                                              const char* const* labels,
                                              const uint64_t* counts,
                                              size_t count, int64_t* out,
                                              size_t dim);
LS_API ls_status ls_monoid_is_element(const ls_monoid* monoid,
                                      const int64_t* v, size_t dim, int* out);
LS_API ls_status ls_monoid_factorizations(const ls_monoid* monoid,
                                          const int64_t* v, size_t dim,
                                          char** out);
LS_API ls_status ls_monoid_lengths(const ls_monoid* monoid, const int64_t* v,
                                   size_t dim, char** out);
LS_API ls_status ls_monoid_catenary_element(const ls_monoid* monoid,
                                            const int64_t* v, size_t dim,
                                            uint64_t* out);
LS_API ls_status ls_monoid_catenary_bounded(const ls_monoid* monoid,
                                            const char* bound, uint64_t* out);
LS_API ls_status ls_monoid_delta_bounded(const ls_monoid* monoid,
                                         const char* bound, char** out);
LS_API ls_status ls_monoid_elements(const ls_monoid* monoid, const char* bound,
                                    char** out);
/* System slice {"bound", "complete_up_to", "sets"}. */
LS_API ls_status ls_monoid_system(const ls_monoid* monoid, const char* bound,
                                  char** out);
/* bound may be NULL for the default. *passed is 1 when every check holds;
   the report is written either way. */
LS_API ls_status ls_monoid_verify(const ls_monoid* monoid, const char* bound,
                                  uint64_t seed, char** report, int* passed);

/* Zero-sum sequences: {"group": [3], "g0": [[1],[2]]}. */
LS_API ls_status ls_group_create(const char* json, ls_group** out);
LS_API void ls_group_free(ls_group* group);
LS_API ls_status ls_group_atoms(const ls_group* group, char** out);
LS_API ls_status ls_group_lengths(const ls_group* group, const char* sequence,
                                  char** out);
LS_API ls_status ls_group_system(const ls_group* group, uint64_t bound,
                                 char** out);

/* Slices as produced by ls_monoid_system / ls_group_system. */
LS_API ls_status ls_irreducible_length_sets(const char* slice, char** out);
LS_API ls_status ls_compare_systems(const char* a, const char* b, char** out);

#ifdef __cplusplus
}
#endif

#endif /* LENGTHSMITH_H */
