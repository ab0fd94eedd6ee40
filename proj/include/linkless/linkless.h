/*
 * linkless: C interface.
 *
 * Graphs are opaque handles created by lk_graph_parse and released with
 * lk_graph_free. Every operation returns an lk_status; on anything other
 * than LK_OK, lk_last_error() describes the failure for the calling thread.
 * Result documents are NUL-terminated JSON strings owned by the caller and
 * released with lk_string_free.
 */
#ifndef LINKLESS_LINKLESS_H
#define LINKLESS_LINKLESS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(LINKLESS_BUILDING)
#define LINKLESS_API __declspec(dllexport)
#else
#define LINKLESS_API __declspec(dllimport)
#endif
#else
#define LINKLESS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct lk_graph lk_graph;

typedef enum lk_status {
  LK_OK = 0,
  LK_ERR_INPUT = 1,    /* bad argument or violated precondition */
  LK_ERR_PARSE = 2,    /* malformed graph or assignment text */
  LK_ERR_RESOURCE = 3, /* a size cap was exceeded */
  LK_ERR_INTERNAL = 4
} lk_status;

typedef enum lk_format {
  LK_FORMAT_AUTO = 0,
  LK_FORMAT_EDGE_LIST = 1,
  LK_FORMAT_GRAPH6 = 2
} lk_format;

typedef enum lk_over_rule {
  LK_OVER_LEXICOGRAPHIC = 0, /* lexicographically smaller chord passes over */
  LK_OVER_RANDOM = 1         /* seeded coin per crossing */
} lk_over_rule;

/* Options for lk_invariant. Zero-initialised options mean: identity vertex
 * order, lexicographic over rule, default cycle cap. */
typedef struct lk_diagram_options {
  const int64_t* order; /* vertex labels in cyclic order, or NULL */
  size_t order_length;
  lk_over_rule rule;
  uint64_t seed;
  /* Diagram JSON whose crossings fix every over/under choice, or NULL.
   * Its "order" is used when no explicit order is given. */
  const char* assignment_json;
  int cycle_vertex_cap; /* 0 selects the default (12) */
} lk_diagram_options;

LINKLESS_API const char* lk_version(void);
LINKLESS_API const char* lk_last_error(void);
LINKLESS_API void lk_string_free(char* s);

/* Parses an edge list or graph6 text. Vertex labels of an edge list are kept
 * and reported back in every JSON document. */
LINKLESS_API lk_status lk_graph_parse(const char* text, size_t length, lk_format format, lk_graph** out);
LINKLESS_API void lk_graph_free(lk_graph* g);
LINKLESS_API int lk_graph_vertex_count(const lk_graph* g);
LINKLESS_API int lk_graph_edge_count(const lk_graph* g);
LINKLESS_API lk_status lk_graph_to_graph6(const lk_graph* g, char** out);

/* vertex_cap <= 0 selects the command default (16 for decide/minor, 10 for
 * web, 12 for cycles). */

/* {"embeddable", "family_member", "branch_sets", "edge_map"} */
LINKLESS_API lk_status lk_decide(const lk_graph* g, int vertex_cap, char** json_out);

/* {"members": [{"index", "graph6", "vertices", "edges", "degree_sequence"}]} */
LINKLESS_API lk_status lk_family(char** json_out);

/* Is pattern a minor of host? {"is_minor", "branch_sets", "edge_map"} */
LINKLESS_API lk_status lk_minor(const lk_graph* host, const lk_graph* pattern, int vertex_cap, char** json_out);

/* Kuratowski web as JSON; dot_out (nullable) receives a DOT rendering. */
LINKLESS_API lk_status lk_web(const lk_graph* g, int vertex_cap, char** json_out, char** dot_out);

/* Convex diagram plus mod-2 Conway-Gordon sum. */
LINKLESS_API lk_status lk_invariant(const lk_graph* g, const lk_diagram_options* options, char** json_out);

/* {"count", "cycles"} */
LINKLESS_API lk_status lk_cycles(const lk_graph* g, int vertex_cap, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* LINKLESS_LINKLESS_H */
