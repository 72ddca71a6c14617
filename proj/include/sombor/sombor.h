/* C interface to the sombor library. All strings returned through `char**`
 * out-parameters are heap-allocated and must be released with
 * sombor_string_free. On a non-OK status, sombor_last_error() describes the
 * failure for the calling thread. */
#ifndef SOMBOR_SOMBOR_H
#define SOMBOR_SOMBOR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SOMBOR_API __declspec(dllexport)
#else
#define SOMBOR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sombor_status {
  SOMBOR_OK = 0,
  SOMBOR_VERIFICATION_FAILED = 1,
  SOMBOR_PARSE_ERROR = 2,
  SOMBOR_INVALID_SEQUENCE = 3,
  SOMBOR_CAP_EXCEEDED = 4,
  SOMBOR_INVALID_ARGUMENT = 5,
  SOMBOR_INTERNAL_ERROR = 6
} sombor_status;

typedef struct sombor_graph sombor_graph;

typedef struct sombor_options {
  uint64_t cap;      /* labelled-tree enumeration cap */
  unsigned jobs;     /* worker threads for verify */
  int include_meta;  /* nonzero: emit elapsed_ms */
} sombor_options;

SOMBOR_API const char* sombor_last_error(void);
SOMBOR_API const char* sombor_version(void);
SOMBOR_API void sombor_string_free(char* s);

/* Defaults: cap from SOMBOR_CAP (else 10^7), one job, meta on. */
SOMBOR_API void sombor_options_init(sombor_options* options);

/* Edge-list text: first data line n, then one "u v" per line, '#' comments. */
SOMBOR_API sombor_status sombor_graph_parse(const char* text, sombor_graph** out);
SOMBOR_API sombor_status sombor_graph_read_file(const char* path, sombor_graph** out);
SOMBOR_API void sombor_graph_free(sombor_graph* g);

SOMBOR_API int sombor_graph_vertex_count(const sombor_graph* g);
SOMBOR_API size_t sombor_graph_edge_count(const sombor_graph* g);
SOMBOR_API sombor_status sombor_graph_edge_list(const sombor_graph* g, char** out);
SOMBOR_API sombor_status sombor_graph_dot(const sombor_graph* g, char** out);
SOMBOR_API sombor_status sombor_graph_index(const sombor_graph* g, double alpha, double* out);
/* Writes up to `capacity` degrees (non-increasing); *count gets the order. */
SOMBOR_API sombor_status sombor_graph_degree_sequence(const sombor_graph* g, int* out, size_t capacity,
                                                      size_t* count);

/* {vertices, edges, alpha, sombor, degree_sequence, edge_types, connected, tree} */
SOMBOR_API sombor_status sombor_compute_json(const sombor_graph* g, double alpha, char** out);

/* kind: greedy | altgreedy (input = degree sequence "3,2,2,1,1,1", "2^4,1^2"),
 *       level | altlevel (input = leveled sequence "3/2,2,1/1,1,1,1"),
 *       tailed-cycle (input = "n,k"). */
SOMBOR_API sombor_status sombor_build(const char* kind, const char* input, sombor_graph** out);

/* Extremal scan of all trees with the sequence. Returns
 * SOMBOR_VERIFICATION_FAILED (with *out set) when G(D) or M(D) misses the
 * scanned extreme. */
SOMBOR_API sombor_status sombor_scan_json(const char* sequence, const sombor_options* options, char** out);

/* Theorem ids: extremal, greedy, alter, alter2, diffdegree, rooted,
 * unicyclic, corollary-max-degree, corollary-leaves, corollary-diameter,
 * corollary-branching. Pass n <= 0 to use seq (and seq2). Returns
 * SOMBOR_VERIFICATION_FAILED (with *out set) on any failure witness. */
SOMBOR_API sombor_status sombor_verify_json(const char* theorem, int n, const char* seq, const char* seq2,
                                            const sombor_options* options, char** out);

/* kind: max-degree | leaves | diameter | branching. */
SOMBOR_API sombor_status sombor_corollary_json(const char* kind, int n, int param, char** out);

#ifdef __cplusplus
}
#endif

#endif
