#ifndef SOLGRAPH_H
#define SOLGRAPH_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes of every fallible call.
 */
typedef enum SgStatus {
  SG_STATUS_OK = 0,
  SG_STATUS_NULL_POINTER = 1,
  SG_STATUS_INVALID_UTF8 = 2,
  SG_STATUS_PARSE = 3,
  SG_STATUS_NOT_MEMBER = 4,
  SG_STATUS_CAP_EXCEEDED = 5,
  SG_STATUS_UNKNOWN_GROUP = 6,
  SG_STATUS_UNKNOWN_CHECK = 7,
  SG_STATUS_INVALID_ARGUMENT = 8,
  SG_STATUS_BUDGET_EXCEEDED = 9,
  SG_STATUS_DISCONNECTED = 10,
  SG_STATUS_EMPTY_GRAPH = 11,
  SG_STATUS_INTERNAL = 12,
} SgStatus;

/**
 * Opaque group handle.
 */
typedef struct SgGroup SgGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *sg_version(void);

/**
 * Message for the last failed call on this thread, or null. Valid until
 * the next call into the library on this thread.
 */
const char *sg_last_error_message(void);

/**
 * Creates a group from a catalog name such as `"A5"` or `"PSL2-7"`.
 *
 * # Safety
 * `name` must be a NUL-terminated string and `out` a valid pointer.
 */
enum SgStatus sg_group_from_name(const char *name, struct SgGroup **out);

/**
 * Creates a group of the given degree from `count` generators in cycle notation.
 *
 * # Safety
 * `generators` must point to `count` NUL-terminated strings and `out` must be valid.
 */
enum SgStatus sg_group_from_generators(size_t degree,
                                       const char *const *generators,
                                       size_t count,
                                       struct SgGroup **out);

/**
 * Releases a handle; null is ignored.
 *
 * # Safety
 * `group` must come from this library and not be used afterwards.
 */
void sg_group_free(struct SgGroup *group);

/**
 * # Safety
 * `group` and `out` must be valid pointers.
 */
enum SgStatus sg_group_order(const struct SgGroup *group, uint64_t *out);

/**
 * # Safety
 * `group` and `out` must be valid pointers.
 */
enum SgStatus sg_group_degree(const struct SgGroup *group, size_t *out);

/**
 * # Safety
 * `group` and `out` must be valid pointers.
 */
enum SgStatus sg_group_is_soluble(const struct SgGroup *group, bool *out);

/**
 * Size of the solubilizer of `element` and whether it is a subgroup.
 *
 * # Safety
 * `group`, `element`, `out_size` and `out_is_subgroup` must be valid pointers.
 */
enum SgStatus sg_solubilizer(const struct SgGroup *group,
                             const char *element,
                             uint64_t *out_size,
                             bool *out_is_subgroup);

/**
 * Order of the soluble radical.
 *
 * # Safety
 * `group` and `out` must be valid pointers.
 */
enum SgStatus sg_radical_order(const struct SgGroup *group, uint64_t *out);

/**
 * Diameter of the solubility graph with the soluble radical removed.
 * Returns `SG_STATUS_EMPTY_GRAPH` for soluble groups.
 *
 * # Safety
 * `group` and `out` must be valid pointers.
 */
enum SgStatus sg_reduced_diameter(const struct SgGroup *group, uint32_t *out);

/**
 * Runs verification checks and returns the JSON report. `suite` is a
 * comma-separated list of check ids, or null for every check. The number
 * of failed checks is written to `out_failed` when it is not null.
 *
 * # Safety
 * `group` and `out_json` must be valid; `suite` null or NUL-terminated.
 */
enum SgStatus sg_verify_json(const struct SgGroup *group,
                             const char *suite,
                             char **out_json,
                             uint32_t *out_failed);

/**
 * Releases a string returned by the library; null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void sg_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SOLGRAPH_H */
