#ifndef YPATTERN_H
#define YPATTERN_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum YpProduct {
  YP_PRODUCT_TENSOR = 0,
  YP_PRODUCT_TRIANGLE = 1,
  YP_PRODUCT_SQUARE = 2,
} YpProduct;

/**
 * Result code of every fallible call.
 */
typedef enum YpStatus {
  YP_STATUS_OK = 0,
  /**
   * Malformed argument: bad JSON, unknown type, vertex out of range.
   */
  YP_STATUS_INVALID_INPUT = 1,
  YP_STATUS_NULL_POINTER = 2,
  /**
   * Broken engine invariant or a caught panic.
   */
  YP_STATUS_INTERNAL = 3,
} YpStatus;

typedef enum YpSystem {
  YP_SYSTEM_BOXTIMES = 0,
  YP_SYSTEM_SQUARE = 1,
  YP_SYSTEM_DIRECT = 2,
  YP_SYSTEM_FOLD = 3,
} YpSystem;

/**
 * Opaque valued quiver.
 */
typedef struct YpQuiver YpQuiver;

/**
 * Opaque seed.
 */
typedef struct YpSeed YpSeed;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Valid until the
 * next call into the library on the same thread.
 */
const char *yp_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, released once.
 */
void yp_string_free(char *s);

/**
 * Parses `{"vertices": [...], "b": [[...]], "d": [...]}`.
 *
 * # Safety
 * `json` must be a nul-terminated string and `out` writable.
 */
enum YpStatus yp_quiver_from_json(const char *json, struct YpQuiver **out);

/**
 * Alternating quiver of a Dynkin type such as `"D4"` or `"B3"`.
 *
 * # Safety
 * `dynkin_type` must be a nul-terminated string and `out` writable.
 */
enum YpStatus yp_quiver_alternating(const char *dynkin_type, struct YpQuiver **out);

/**
 * # Safety
 * `q` must be a live quiver handle and `out` writable.
 */
enum YpStatus yp_quiver_to_json(const struct YpQuiver *q, char **out);

/**
 * Number of vertices; 0 for a null handle.
 *
 * # Safety
 * `q` must be null or a live quiver handle.
 */
size_t yp_quiver_len(const struct YpQuiver *q);

/**
 * Mutation at the 0-based vertex `k`, into a new handle.
 *
 * # Safety
 * `q` must be a live quiver handle and `out` writable.
 */
enum YpStatus yp_quiver_mutate(const struct YpQuiver *q, size_t k, struct YpQuiver **out);

/**
 * Tensor, triangle or square product of two acyclic quivers.
 *
 * # Safety
 * `a` and `b` must be live quiver handles and `out` writable.
 */
enum YpStatus yp_quiver_product(const struct YpQuiver *a,
                                const struct YpQuiver *b,
                                enum YpProduct kind,
                                struct YpQuiver **out);

/**
 * # Safety
 * `q` must be null or a handle from this library, released once.
 */
void yp_quiver_free(struct YpQuiver *q);

/**
 * Initial seed with principal coefficients at `q`.
 *
 * # Safety
 * `q` must be a live quiver handle and `out` writable.
 */
enum YpStatus yp_seed_initial(const struct YpQuiver *q, struct YpSeed **out);

/**
 * # Safety
 * `s` must be a live seed handle and `out` writable.
 */
enum YpStatus yp_seed_mutate(const struct YpSeed *s, size_t k, struct YpSeed **out);

/**
 * # Safety
 * `a` and `b` must be live seed handles and `out` writable.
 */
enum YpStatus yp_seed_equals(const struct YpSeed *a, const struct YpSeed *b, bool *out);

/**
 * `{"b": ..., "d": ..., "c": ..., "f": [...], "g": ...}`.
 *
 * # Safety
 * `s` must be a live seed handle and `out` writable.
 */
enum YpStatus yp_seed_to_json(const struct YpSeed *s, char **out);

/**
 * # Safety
 * `json` must be a nul-terminated string and `out` writable.
 */
enum YpStatus yp_seed_from_json(const char *json, struct YpSeed **out);

/**
 * # Safety
 * `s` must be null or a handle from this library, released once.
 */
void yp_seed_free(struct YpSeed *s);

/**
 * Runs a verification and writes the JSON report to `out_json` and its
 * verdict to `out_verified`. `max_rounds = 0` uses the default bound;
 * `trials` is the number of random points.
 *
 * # Safety
 * `left` and `right` must be nul-terminated strings; out pointers writable.
 */
enum YpStatus yp_verify_periodicity(const char *left,
                                    const char *right,
                                    enum YpSystem system,
                                    size_t max_rounds,
                                    size_t trials,
                                    uint64_t rng_seed,
                                    char **out_json,
                                    bool *out_verified);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* YPATTERN_H */
