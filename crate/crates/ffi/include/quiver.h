#ifndef QUIVER_H
#define QUIVER_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum QvStatus {
  QV_STATUS_OK = 0,
  QV_STATUS_NULL_POINTER = 1,
  QV_STATUS_INVALID_UTF8 = 2,
  QV_STATUS_INVALID_INPUT = 3,
  QV_STATUS_OVERFLOW = 4,
  QV_STATUS_INTERNAL = 5,
} QvStatus;

/**
 * Validated rank conditions.
 */
typedef struct QvRankConditions QvRankConditions;

/**
 * A symmetric function in the Schur basis.
 */
typedef struct QvSchur QvSchur;

/**
 * An element of a tensor power of the ring of symmetric functions.
 */
typedef struct QvTensor QvTensor;

/**
 * Message for the last failure on this thread, or an empty string. Owned by
 * the library and valid until the next call on the same thread.
 */
const char *qv_last_error_message(void);

/**
 * Parses rank conditions in text form (`n`, then `n + 1` rows).
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum QvStatus qv_rank_conditions_parse(const char *text, struct QvRankConditions **out);

/**
 * Rank conditions of a permutation given in one-line notation.
 *
 * # Safety
 * `perm` must be a NUL-terminated string; `out` must be writable.
 */
enum QvStatus qv_rank_conditions_from_permutation(const char *perm, struct QvRankConditions **out);

/**
 * Number of maps `n` in the sequence.
 *
 * # Safety
 * `r` must come from this library; `out` must be writable.
 */
enum QvStatus qv_rank_conditions_n(const struct QvRankConditions *r, uintptr_t *out);

/**
 * Expected codimension `d(r)`.
 *
 * # Safety
 * `r` must come from this library; `out` must be writable.
 */
enum QvStatus qv_rank_conditions_codim(const struct QvRankConditions *r, uintptr_t *out);

/**
 * # Safety
 * `r` must come from this library and not be used afterwards. Null is ignored.
 */
void qv_rank_conditions_free(struct QvRankConditions *r);

/**
 * The element `P_r` whose coefficients are the quiver coefficients.
 *
 * # Safety
 * `r` must come from this library; `out` must be writable.
 */
enum QvStatus qv_compute_p(const struct QvRankConditions *r, struct QvTensor **out);

/**
 * # Safety
 * `t` must come from this library; `out` must be writable.
 */
enum QvStatus qv_tensor_arity(const struct QvTensor *t, uintptr_t *out);

/**
 * Number of non-zero terms.
 *
 * # Safety
 * `t` must come from this library; `out` must be writable.
 */
enum QvStatus qv_tensor_term_count(const struct QvTensor *t, uintptr_t *out);

/**
 * Coefficient of the term whose shapes are given as a JSON array of
 * partitions, e.g. `[[1],[],[2,1]]`.
 *
 * # Safety
 * `t` must come from this library, `shapes_json` must be a NUL-terminated
 * string and `out` must be writable.
 */
enum QvStatus qv_tensor_coefficient(const struct QvTensor *t,
                                    const char *shapes_json,
                                    int64_t *out);

/**
 * JSON array of `{"shapes": [...], "coeff": c}` objects.
 *
 * # Safety
 * `t` must come from this library; `out` must be writable. Release the
 * string with `qv_string_free`.
 */
enum QvStatus qv_tensor_json(const struct QvTensor *t, char **out);

/**
 * # Safety
 * `t` must come from this library and not be used afterwards. Null is ignored.
 */
void qv_tensor_free(struct QvTensor *t);

/**
 * Stanley symmetric function of a permutation.
 *
 * # Safety
 * `perm` must be a NUL-terminated string; `out` must be writable.
 */
enum QvStatus qv_stanley(const char *perm, struct QvSchur **out);

/**
 * Text form such as `s[2] + s[1,1]`.
 *
 * # Safety
 * `s` must come from this library; `out` must be writable. Release the
 * string with `qv_string_free`.
 */
enum QvStatus qv_schur_to_string(const struct QvSchur *s, char **out);

/**
 * JSON map from partition to coefficient, e.g. `{"[3,1]":1}`.
 *
 * # Safety
 * `s` must come from this library; `out` must be writable. Release the
 * string with `qv_string_free`.
 */
enum QvStatus qv_schur_json(const struct QvSchur *s, char **out);

/**
 * # Safety
 * `s` must come from this library and not be used afterwards. Null is ignored.
 */
void qv_schur_free(struct QvSchur *s);

/**
 * Number of reduced words of a permutation.
 *
 * # Safety
 * `perm` must be a NUL-terminated string; `out` must be writable.
 */
enum QvStatus qv_reduced_word_count(const char *perm, uint64_t *out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void qv_string_free(char *s);

#endif  /* QUIVER_H */
