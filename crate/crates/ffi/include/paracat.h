#ifndef PARACAT_H
#define PARACAT_H

/* Generated by cbindgen; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Parabolic Catalan family selector for `paracat_family_count`.
 */
typedef enum ParacatFamily {
  PARACAT_FAMILY_ALIGNED = 0,
  PARACAT_FAMILY_NONCROSSING = 1,
  PARACAT_FAMILY_SUBWORD = 2,
} ParacatFamily;

typedef enum ParacatStatus {
  PARACAT_STATUS_OK = 0,
  PARACAT_STATUS_NULL_POINTER = 1,
  PARACAT_STATUS_INVALID_ARGUMENT = 2,
  PARACAT_STATUS_OUT_OF_BOUNDS = 3,
  PARACAT_STATUS_UNSUPPORTED = 4,
  PARACAT_STATUS_NO_ROOT_POSET = 5,
  PARACAT_STATUS_INTERNAL = 6,
} ParacatStatus;

/**
 * Opaque permutation handle.
 */
typedef struct ParacatPermutation ParacatPermutation;

/**
 * Opaque Coxeter system handle.
 */
typedef struct ParacatSystem ParacatSystem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The message of the last failed call on this thread, or NULL. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *paracat_last_error(void);

/**
 * Parses one-line notation such as "3142", "3 1 4 2" or "4|23|1".
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum ParacatStatus paracat_permutation_parse(const char *text, struct ParacatPermutation **out);

/**
 * # Safety
 * `perm` must come from `paracat_permutation_parse` or be NULL.
 */
void paracat_permutation_free(struct ParacatPermutation *perm);

/**
 * Size n and Coxeter length (number of inversions).
 *
 * # Safety
 * `perm` must be a live handle; `n` and `length` valid pointers.
 */
enum ParacatStatus paracat_permutation_info(const struct ParacatPermutation *perm,
                                            size_t *n,
                                            size_t *length);

/**
 * Whether the permutation lies in S_n^J and avoids (J,231)-patterns.
 * `j` lists 1-based generator indices.
 *
 * # Safety
 * `perm` must be a live handle, `j` must point to `j_len` values, `out` valid.
 */
enum ParacatStatus paracat_is_j231_avoiding(const struct ParacatPermutation *perm,
                                            const size_t *j,
                                            size_t j_len,
                                            bool *out);

/**
 * Number of (J,231)-avoiding permutations of S_n^J (n at most 10).
 *
 * # Safety
 * `j` must point to `j_len` values and `out` must be valid.
 */
enum ParacatStatus paracat_tamari_count(size_t n, const size_t *j, size_t j_len, uint64_t *out);

/**
 * |NN_n^J| through the Kreweras determinant of the bounding shape.
 *
 * # Safety
 * `j` must point to `j_len` values and `out` must be valid.
 */
enum ParacatStatus paracat_kreweras_count(size_t n, const size_t *j, size_t j_len, uint64_t *out);

/**
 * Builds a Coxeter system from a type name ("A", "H3", "affine-A3", "I").
 * `rank` of 0 takes the rank from the name; `m` is only read for type I.
 *
 * # Safety
 * `type_name` must be a NUL-terminated string and `out` valid.
 */
enum ParacatStatus paracat_system_new(const char *type_name,
                                      size_t rank,
                                      uint32_t m,
                                      struct ParacatSystem **out);

/**
 * # Safety
 * `sys` must come from `paracat_system_new` or be NULL.
 */
void paracat_system_free(struct ParacatSystem *sys);

/**
 * # Safety
 * `sys` must be a live handle and `out` valid.
 */
enum ParacatStatus paracat_system_rank(const struct ParacatSystem *sys, size_t *out);

/**
 * Size of one parabolic Catalan family for (W, J, c) under the positive
 * decomposition rule. `j` and `c` hold 0-based generator indices.
 *
 * # Safety
 * `sys` must be a live handle; `j`/`c` must point to `j_len`/`c_len` values.
 */
enum ParacatStatus paracat_family_count(const struct ParacatSystem *sys,
                                        enum ParacatFamily family,
                                        const size_t *j,
                                        size_t j_len,
                                        const size_t *c,
                                        size_t c_len,
                                        uint64_t *out);

/**
 * |NN(W^J)| from the built-in root poset, or from `root_poset_file` (the
 * text of a root-poset file) when it is not NULL.
 *
 * # Safety
 * `sys` must be a live handle, `j` must point to `j_len` values,
 * `root_poset_file` must be NULL or NUL-terminated, `out` valid.
 */
enum ParacatStatus paracat_nonnesting_count(const struct ParacatSystem *sys,
                                            const size_t *j,
                                            size_t j_len,
                                            const char *root_poset_file,
                                            uint64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PARACAT_H */
