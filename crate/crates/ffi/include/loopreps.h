#ifndef LOOPREPS_H
#define LOOPREPS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes.
 */
typedef enum LrStatus {
  LR_STATUS_OK = 0,
  LR_STATUS_NULL_POINTER = 1,
  LR_STATUS_INVALID_UTF8 = 2,
  LR_STATUS_UNKNOWN_GROUP = 3,
  LR_STATUS_UNKNOWN_SUBGROUP = 4,
  LR_STATUS_OUTSIDE_ALCOVE = 5,
  LR_STATUS_INVALID_ARGUMENT = 6,
  LR_STATUS_INTERNAL = 7,
} LrStatus;

/**
 * Opaque handle to a simply connected group with its center.
 */
typedef struct LrGroup LrGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds a group from a name such as `"Spin8"`, `"E6"` or `"SU3"`.
 *
 * # Safety
 * `name` must be a NUL-terminated string; `out` must be writable.
 */
enum LrStatus lr_group_new(const char *name, struct LrGroup **out);

/**
 * Releases a group. Null is ignored.
 *
 * # Safety
 * `g` must come from [`lr_group_new`] and not be used afterwards.
 */
void lr_group_free(struct LrGroup *g);

/**
 * Rank of the group.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum LrStatus lr_group_rank(const struct LrGroup *g, size_t *out);

/**
 * Order of the center.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum LrStatus lr_group_order(const struct LrGroup *g, size_t *out);

/**
 * Fundamental and basic levels for a named central subgroup.
 *
 * # Safety
 * `g` must be a live handle, `subgroup` NUL-terminated, outputs writable.
 */
enum LrStatus lr_levels(const struct LrGroup *g,
                        const char *subgroup,
                        uint32_t *fundamental,
                        uint32_t *basic);

/**
 * Number of weights in the level `level` alcove.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum LrStatus lr_alcove_size(const struct LrGroup *g, uint32_t level, size_t *out);

/**
 * Applies the central element of special node `element` (0 for the
 * identity) to the alcove weight with `len` Dynkin labels.
 *
 * # Safety
 * `labels` and `out_labels` must each point to `len` values.
 */
enum LrStatus lr_act(const struct LrGroup *g,
                     size_t element,
                     uint32_t level,
                     const int64_t *labels,
                     size_t len,
                     int64_t *out_labels);

/**
 * Classification of `L_Z G` at `level` as a JSON document.
 *
 * # Safety
 * `g` must be a live handle, `subgroup` NUL-terminated, `out` writable.
 * The string written to `out` must be freed with [`lr_string_free`].
 */
enum LrStatus lr_classify_json(const struct LrGroup *g,
                               const char *subgroup,
                               uint32_t level,
                               char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void lr_string_free(char *s);

/**
 * Static description of a status code.
 */
const char *lr_status_message(enum LrStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LOOPREPS_H */
