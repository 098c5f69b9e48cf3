#ifndef SPRINGER_K_H
#define SPRINGER_K_H

/* Generated by cbindgen from crates/ffi. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SkStatus {
  SK_STATUS_OK = 0,
  SK_STATUS_CHECK_FAILED = 1,
  SK_STATUS_INVALID_ARGUMENT = 2,
  SK_STATUS_DEGENERATE = 3,
  SK_STATUS_NULL_POINTER = 4,
  SK_STATUS_PANIC = 5,
} SkStatus;

/**
 * Opaque partition handle.
 */
typedef struct SkPartition SkPartition;

/**
 * Opaque ideal presentation handle.
 */
typedef struct SkPresentation SkPresentation;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses comma-separated parts. Unsorted input is sorted.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum SkStatus sk_partition_parse(const char *text, struct SkPartition **out);

/**
 * # Safety
 * `partition` must come from [`sk_partition_parse`] or be null.
 */
void sk_partition_free(struct SkPartition *partition);

/**
 * Size `n` of the partition.
 *
 * # Safety
 * Pointers must be valid.
 */
enum SkStatus sk_partition_size(const struct SkPartition *partition, size_t *out);

/**
 * `n!/(λ_1!⋯λ_l!)` in decimal.
 *
 * # Safety
 * Pointers must be valid.
 */
enum SkStatus sk_partition_multinomial(const struct SkPartition *partition, char **out);

/**
 * Builds a presentation. `flavor` is one of `EqK`, `EqK-compact`, `EqCoh`,
 * `OrdK`, `Flag`, `ClassicalCoh`.
 *
 * # Safety
 * Pointers must be valid; `flavor` NUL-terminated.
 */
enum SkStatus sk_presentation_build(const struct SkPartition *partition,
                                    const char *flavor,
                                    struct SkPresentation **out);

/**
 * # Safety
 * `presentation` must come from [`sk_presentation_build`] or be null.
 */
void sk_presentation_free(struct SkPresentation *presentation);

/**
 * Number of nonzero generators.
 *
 * # Safety
 * Pointers must be valid.
 */
enum SkStatus sk_presentation_generator_count(const struct SkPresentation *presentation,
                                              size_t *out);

/**
 * The presentation as JSON.
 *
 * # Safety
 * Pointers must be valid.
 */
enum SkStatus sk_presentation_to_json(const struct SkPresentation *presentation, char **out);

/**
 * Quotient dimension at a generic point, certified by two seeds.
 * Returns [`SkStatus::Degenerate`] when the retries run out.
 *
 * # Safety
 * Pointers must be valid.
 */
enum SkStatus sk_generic_rank(const struct SkPresentation *presentation,
                              uint64_t seed,
                              uint32_t retries,
                              size_t *out);

/**
 * Fixed-point words as a JSON array of arrays.
 *
 * # Safety
 * Pointers must be valid.
 */
enum SkStatus sk_fixed_points_json(const struct SkPartition *partition, char **out);

/**
 * Runs a verification suite and writes the list of check reports as JSON
 * to `out` (which may be null). Returns [`SkStatus::CheckFailed`] if any
 * check fails; `out` is filled in either case.
 *
 * # Safety
 * Pointers must be valid; `suite` NUL-terminated.
 */
enum SkStatus sk_verify(const struct SkPartition *partition,
                        const char *suite,
                        uint64_t seed,
                        char **out);

/**
 * # Safety
 * `s` must come from this library or be null.
 */
void sk_string_free(char *s);

/**
 * Message of the last failed call on this thread, or null.
 */
const char *sk_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SPRINGER_K_H */
