#ifndef BENZLEAP_H
#define BENZLEAP_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum BlFamily {
  BL_FAMILY_ZIGZAG = 0,
  BL_FAMILY_RHOMBIC = 1,
} BlFamily;

/**
 * Index kinds, in the same order as the library's token list.
 */
typedef enum BlIndexKind {
  BL_INDEX_KIND_LM1 = 0,
  BL_INDEX_KIND_LM2,
  BL_INDEX_KIND_HLM1,
  BL_INDEX_KIND_HLM2,
  BL_INDEX_KIND_LSO,
  BL_INDEX_KIND_LF,
  BL_INDEX_KIND_HLF,
  BL_INDEX_KIND_LY,
  BL_INDEX_KIND_LYCO,
  BL_INDEX_KIND_M1,
  BL_INDEX_KIND_M2,
  BL_INDEX_KIND_F,
  BL_INDEX_KIND_HF,
  BL_INDEX_KIND_Y,
  BL_INDEX_KIND_YCO,
  BL_INDEX_KIND_SO,
  BL_INDEX_KIND_HM2,
  BL_INDEX_KIND_HM2CO,
} BlIndexKind;

typedef enum BlReportFormat {
  BL_REPORT_FORMAT_TEXT = 0,
  BL_REPORT_FORMAT_CSV = 1,
  BL_REPORT_FORMAT_JSONL = 2,
} BlReportFormat;

typedef enum BlStatus {
  BL_STATUS_OK = 0,
  BL_STATUS_NULL_POINTER = 1,
  BL_STATUS_INVALID_ARGUMENT = 2,
  BL_STATUS_INVALID_GRAPH = 3,
  BL_STATUS_OVERFLOW = 4,
  BL_STATUS_BUFFER_TOO_SMALL = 5,
  BL_STATUS_PANIC = 6,
} BlStatus;

/**
 * Opaque graph handle.
 */
typedef struct BlGraph BlGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds the zigzag (`BL_FAMILY_ZIGZAG`) or rhombic member with parameter
 * `p >= 1` and stores a new handle in `*out`.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle.
 */
enum BlStatus bl_graph_family(enum BlFamily family, uint32_t p, struct BlGraph **out);

/**
 * Builds a graph on `vertex_count` vertices from `edge_count` pairs laid
 * out flat in `edges` (`edges[2i]`, `edges[2i+1]`).
 *
 * # Safety
 * `edges` must point to `2 * edge_count` readable values (it may be null
 * when `edge_count` is 0); `out` must be valid for one write.
 */
enum BlStatus bl_graph_from_edges(size_t vertex_count,
                                  const uint32_t *edges,
                                  size_t edge_count,
                                  struct BlGraph **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `g` must be null or a handle from this library not yet freed.
 */
void bl_graph_free(struct BlGraph *g);

/**
 * # Safety
 * `g` must be a live handle and `out` valid for one write.
 */
enum BlStatus bl_graph_vertex_count(const struct BlGraph *g, size_t *out);

/**
 * # Safety
 * `g` must be a live handle and `out` valid for one write.
 */
enum BlStatus bl_graph_edge_count(const struct BlGraph *g, size_t *out);

/**
 * Writes the k-distance degree of every vertex into `buf`. `*written`
 * receives the vertex count; if `capacity` is smaller than that, nothing
 * is copied and `BL_STATUS_BUFFER_TOO_SMALL` is returned.
 *
 * # Safety
 * `buf` must have room for `capacity` values; `written` must be valid.
 */
enum BlStatus bl_k_degree_profile(const struct BlGraph *g,
                                  uint32_t k,
                                  uint32_t *buf,
                                  size_t capacity,
                                  size_t *written);

/**
 * Evaluates an integer-valued index. Classical kinds ignore `k`.
 * Returns `BL_STATUS_INVALID_ARGUMENT` for real-valued kinds and
 * `BL_STATUS_OVERFLOW` if the value does not fit in 64 bits.
 *
 * # Safety
 * `g` must be a live handle and `out` valid for one write.
 */
enum BlStatus bl_index_int(const struct BlGraph *g,
                           uint32_t k,
                           enum BlIndexKind kind,
                           int64_t *out);

/**
 * Evaluates any index as a double. Classical kinds ignore `k`.
 *
 * # Safety
 * `g` must be a live handle and `out` valid for one write.
 */
enum BlStatus bl_index_real(const struct BlGraph *g,
                            uint32_t k,
                            enum BlIndexKind kind,
                            double *out);

/**
 * Renders a verification report for `p_min..=p_max` and stores a newly
 * allocated NUL-terminated string in `*out`. `*has_mismatch` (if not
 * null) is set to 1 when any row is an unexplained mismatch.
 *
 * # Safety
 * `out` must be valid for one write; free the string with `bl_string_free`.
 */
enum BlStatus bl_verify_report(enum BlFamily family,
                               uint32_t p_min,
                               uint32_t p_max,
                               enum BlReportFormat format,
                               char **out,
                               int32_t *has_mismatch);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string from this library not yet freed.
 */
void bl_string_free(char *s);

/**
 * Message for the last failed call on this thread, or an empty string.
 * The pointer stays valid until the next call into the library on the
 * same thread.
 */
const char *bl_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *bl_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BENZLEAP_H */
