#ifndef CUBARTIN_H
#define CUBARTIN_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CubartinGroup {
  /**
   * Two-generator Artin group with label `n`.
   */
  CUBARTIN_GROUP_DIHEDRAL = 0,
  /**
   * Three-generator spherical type with labels `m`, 2, 3.
   */
  CUBARTIN_GROUP_SPHERICAL = 1,
} CubartinGroup;

typedef enum CubartinStatus {
  CUBARTIN_STATUS_OK = 0,
  /**
   * The question was answered in the negative where an object was
   * expected, e.g. a build for a graph with no cubulation.
   */
  CUBARTIN_STATUS_NEGATIVE = 1,
  /**
   * Malformed text input or parameters out of range.
   */
  CUBARTIN_STATUS_INPUT_ERROR = 2,
  CUBARTIN_STATUS_NULL_POINTER = 3,
  CUBARTIN_STATUS_INVALID_UTF8 = 4,
  /**
   * A panic was caught at the boundary.
   */
  CUBARTIN_STATUS_INTERNAL = 5,
} CubartinStatus;

typedef enum CubartinVerdict {
  CUBARTIN_VERDICT_COCOMPACTLY_CUBULATED = 0,
  CUBARTIN_VERDICT_NOT_VIRTUALLY_COCOMPACTLY_CUBULATED = 1,
  CUBARTIN_VERDICT_OUTSIDE_CLASSIFICATION = 2,
} CubartinVerdict;

/**
 * A cube complex.
 */
typedef struct CubartinComplex CubartinComplex;

/**
 * A parsed defining graph.
 */
typedef struct CubartinGraph CubartinGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. The pointer stays
 * valid until the next library call on the same thread.
 */
const char *cubartin_last_error(void);

/**
 * Library version as a static string.
 */
const char *cubartin_version(void);

/**
 * # Safety
 * `s` is NULL or a string returned by this library and not yet freed.
 */
void cubartin_string_free(char *s);

/**
 * Parse a defining graph from its text form.
 *
 * # Safety
 * `text_in` is a NUL-terminated string; `graph_out` is writable.
 */
enum CubartinStatus cubartin_graph_parse(const char *text_in, struct CubartinGraph **graph_out);

/**
 * # Safety
 * `g` is NULL or a handle from [`cubartin_graph_parse`] not yet freed.
 */
void cubartin_graph_free(struct CubartinGraph *g);

/**
 * # Safety
 * `g` is a live graph handle; `count_out` is writable.
 */
enum CubartinStatus cubartin_graph_vertex_count(const struct CubartinGraph *g, size_t *count_out);

/**
 * Classify the graph. `justification_out` may be NULL; otherwise it receives
 * an owned string.
 *
 * # Safety
 * `g` is a live graph handle; `verdict_out` is writable.
 */
enum CubartinStatus cubartin_graph_verdict(const struct CubartinGraph *g,
                                           enum CubartinVerdict *verdict_out,
                                           char **justification_out);

/**
 * Build the cube complex for a positively classified graph. Returns
 * `Negative` when the verdict is not positive.
 *
 * # Safety
 * `g` is a live graph handle; `complex_out` is writable.
 */
enum CubartinStatus cubartin_complex_build(const struct CubartinGraph *g,
                                           struct CubartinComplex **complex_out);

/**
 * Read a complex from its JSONL serialization.
 *
 * # Safety
 * `text_in` is a NUL-terminated string; `complex_out` is writable.
 */
enum CubartinStatus cubartin_complex_read(const char *text_in,
                                          struct CubartinComplex **complex_out);

/**
 * # Safety
 * `c` is NULL or a complex handle not yet freed.
 */
void cubartin_complex_free(struct CubartinComplex *c);

/**
 * JSONL serialization as an owned string.
 *
 * # Safety
 * `c` is a live complex handle; `text_out` is writable.
 */
enum CubartinStatus cubartin_complex_write(const struct CubartinComplex *c, char **text_out);

/**
 * Counts of vertices, edges and squares.
 *
 * # Safety
 * `c` is a live complex handle; the three outputs are writable.
 */
enum CubartinStatus cubartin_complex_cell_counts(const struct CubartinComplex *c,
                                                 size_t *vertices_out,
                                                 size_t *edges_out,
                                                 size_t *squares_out);

/**
 * Whether every vertex link is flag with no short cycles.
 *
 * # Safety
 * `c` is a live complex handle; `npc_out` is writable.
 */
enum CubartinStatus cubartin_complex_is_npc(const struct CubartinComplex *c, bool *npc_out);

/**
 * Whether the complex is a finite CAT(0) cube complex given by a median
 * 1-skeleton.
 *
 * # Safety
 * `c` is a live complex handle; `median_out` is writable.
 */
enum CubartinStatus cubartin_complex_is_median(const struct CubartinComplex *c, bool *median_out);

/**
 * Abelianization of the fundamental group, e.g. `Z^3` or `Z + Z/2`.
 *
 * # Safety
 * `c` is a live complex handle; `text_out` is writable.
 */
enum CubartinStatus cubartin_complex_abelianization(const struct CubartinComplex *c,
                                                    char **text_out);

/**
 * Square complex of the dual to a wallspace given in text form. `bound`
 * caps the number of walls; 0 selects the default.
 *
 * # Safety
 * `text_in` is a NUL-terminated string; `complex_out` is writable.
 */
enum CubartinStatus cubartin_wallspace_dual(const char *text_in,
                                            size_t bound,
                                            struct CubartinComplex **complex_out);

/**
 * Garside normal form of a word such as `abAB` (capitals are inverses).
 *
 * # Safety
 * `word` is a NUL-terminated string; `text_out` is writable.
 */
enum CubartinStatus cubartin_normal_form(enum CubartinGroup group,
                                         uint32_t param,
                                         const char *word,
                                         char **text_out);

/**
 * Whether two words are equal in the group.
 *
 * # Safety
 * `left` and `right` are NUL-terminated strings; `equal_out` is writable.
 */
enum CubartinStatus cubartin_words_equal(enum CubartinGroup group,
                                         uint32_t param,
                                         const char *left,
                                         const char *right,
                                         bool *equal_out);

/**
 * Run the command-line interface in-process. `argv` excludes the program
 * name. Standard output and error are returned as owned strings and the
 * exit code through `exit_out`; the status is `Ok` whenever the command ran.
 *
 * # Safety
 * `argv` points to `argc` NUL-terminated strings; the outputs are writable.
 */
enum CubartinStatus cubartin_cli_run(const char *const *argv,
                                     size_t argc,
                                     char **stdout_out,
                                     char **stderr_out,
                                     int32_t *exit_out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CUBARTIN_H */
