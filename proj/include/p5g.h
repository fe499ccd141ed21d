/*
 * p5g — 2-distance coloring and discharging toolkit for embedded planar
 * graphs of girth at least five.
 *
 * C interface over the core library. Graphs are opaque handles created by
 * the parse/generate functions and released with p5g_graph_free. Every
 * function returns P5G_OK or an error code; p5g_last_error() gives a
 * human-readable message for the most recent failure on the calling thread.
 * Strings returned through char** out-parameters are heap-allocated and must
 * be released with p5g_string_free. Out-parameters may be NULL to skip an
 * output. All functions are safe to call concurrently on distinct or shared
 * graph handles; handles are immutable after creation.
 */

#ifndef P5G_H
#define P5G_H

#include <stdint.h>

#if defined(_WIN32)
#define P5G_API __declspec(dllexport)
#else
#define P5G_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct p5g_graph p5g_graph;

typedef enum p5g_status {
    P5G_OK = 0,
    P5G_ERR_BAD_ARGUMENT = 1,        /* NULL handle or out-parameter misuse */
    P5G_ERR_PARSE = 2,               /* malformed p5g text, spec, coloring or manifest */
    P5G_ERR_ASYMMETRIC_ADJACENCY = 3,
    P5G_ERR_LOOP = 4,
    P5G_ERR_PARALLEL_EDGE = 5,
    P5G_ERR_DANGLING_VERTEX_ID = 6,
    P5G_ERR_DISCONNECTED = 7,
    P5G_ERR_NOT_PLANAR_EMBEDDING = 8,
    P5G_ERR_DELTA_TOO_SMALL = 9,     /* delta parameter below the graph's max degree */
    P5G_ERR_DEGREE_TOO_SMALL = 10,
    P5G_ERR_BAD_PARAMETER = 11,      /* generator parameter out of range */
    P5G_ERR_BUDGET_EXCEEDED = 12,    /* exact search timed out; bounds are still reported */
    P5G_ERR_PRECONDITION = 13,
    P5G_ERR_EXTENSION_FAILED = 14,
    P5G_ERR_INTERNAL = 15,
} p5g_status;

P5G_API const char* p5g_version(void);
P5G_API const char* p5g_status_name(p5g_status status);

/* Message for the most recent error on this thread; valid until the next
 * failing call on the same thread. */
P5G_API const char* p5g_last_error(void);

P5G_API void p5g_string_free(char* s);
P5G_API void p5g_graph_free(p5g_graph* g);

/* ---- construction -------------------------------------------------- */

/* Parses "p5g v1" text: header `p5g <n> <m>`, then one line `rot <v>: u1 u2
 * ...` per vertex with the clockwise rotation; `#` starts a comment. */
P5G_API p5g_status p5g_graph_from_text(const char* text, p5g_graph** out);

/* Canonical "p5g v1" serialization; read/write round-trip exactly. */
P5G_API p5g_status p5g_graph_to_text(const p5g_graph* g, char** out);

/* Builds a corpus graph from a one-line spec: `family key=value ...` with
 * families cycle (n), spider (delta, legs), dodecahedron,
 * subdivided-triangulation (n, seed), grafted (n, delta, seed).
 * default_seed fills in a missing seed= for the seeded families. */
P5G_API p5g_status p5g_graph_from_spec(const char* spec_line, uint64_t default_seed,
                                       p5g_graph** out);

/* Resolved canonical form of a spec line, and its stable 16-hex-digit hash
 * (used for per-spec output directories). */
P5G_API p5g_status p5g_spec_canonical(const char* spec_line, uint64_t default_seed, char** out);
P5G_API p5g_status p5g_spec_hash(const char* spec_line, uint64_t default_seed, char** hex_out);

P5G_API p5g_status p5g_gen_cycle(uint32_t n, p5g_graph** out);
P5G_API p5g_status p5g_gen_spider(uint32_t center_degree, uint32_t leg_length, p5g_graph** out);
P5G_API p5g_status p5g_gen_dodecahedron(p5g_graph** out);
P5G_API p5g_status p5g_gen_girth5_random(uint32_t n, uint32_t delta_target, uint64_t seed,
                                         p5g_graph** out);

/* ---- structure queries ---------------------------------------------- */

P5G_API p5g_status p5g_graph_order(const p5g_graph* g, uint32_t* n_out);
P5G_API p5g_status p5g_graph_size(const p5g_graph* g, uint64_t* m_out);
P5G_API p5g_status p5g_graph_max_degree(const p5g_graph* g, uint32_t* delta_out);

/* Girth; *unbounded_out is nonzero for forests (girth_out is then 0). */
P5G_API p5g_status p5g_graph_girth(const p5g_graph* g, int* unbounded_out, uint32_t* girth_out);

P5G_API p5g_status p5g_graph_face_count(const p5g_graph* g, uint32_t* faces_out);
P5G_API p5g_status p5g_graph_is_connected(const p5g_graph* g, int* connected_out);

/* Nonzero iff |V| - |E| + |F| = 2 for the traced faces.
 * Fails with P5G_ERR_DISCONNECTED on disconnected input. */
P5G_API p5g_status p5g_graph_genus_zero(const p5g_graph* g, int* ok_out);

/* Structural profile and reducible-configuration report as JSON documents.
 * delta = 0 uses the graph's maximum degree; an explicit delta below the
 * maximum degree fails with P5G_ERR_DELTA_TOO_SMALL. */
P5G_API p5g_status p5g_analyze_json(const p5g_graph* g, uint32_t delta, char** profile_json_out,
                                    char** violations_json_out);

/* ---- coloring -------------------------------------------------------- */

/* 2-distance coloring. exact = 0 runs the deterministic DSATUR heuristic on
 * the square graph; exact != 0 runs branch and bound within budget_ms
 * milliseconds (negative means a 5000 ms default). On success *colors_out is the
 * palette size, *is_exact_out tells which engine produced it, and
 * *coloring_text_out (if non-NULL) holds the coloring in text form. When the
 * exact search runs out of time the call returns P5G_ERR_BUDGET_EXCEEDED and
 * fills *lower_out / *upper_out with the bounds established so far. */
P5G_API p5g_status p5g_color(const p5g_graph* g, int exact, int64_t budget_ms,
                             char** coloring_text_out, uint32_t* colors_out, int* is_exact_out,
                             uint32_t* lower_out, uint32_t* upper_out);

/* Validates coloring text (header `k <palette>`, lines `<vertex> <color>`).
 * *valid_out is nonzero when no two colored vertices at distance <= 2 share
 * a color; otherwise the first conflicting pair is reported. */
P5G_API p5g_status p5g_validate_coloring(const p5g_graph* g, const char* coloring_text,
                                         int* valid_out, uint32_t* conflict_u_out,
                                         uint32_t* conflict_v_out);

/* The decolor-and-extend procedure: given a valid partial coloring on a
 * palette of exactly delta + 4 colors with vertex v as its only uncolored
 * vertex, and v not heavy, decolors v's light neighbours, colors v, then
 * recolors the decolored set (non-2-vertices first), always least color
 * first. Returns the total coloring as text. Fails with
 * P5G_ERR_PRECONDITION when v is heavy or the coloring is malformed, and
 * with P5G_ERR_EXTENSION_FAILED when some vertex ends up with no available
 * color (possible only off the guaranteed structure). */
P5G_API p5g_status p5g_extend_light(const p5g_graph* g, const char* coloring_text, uint32_t v,
                                    uint32_t delta, char** extended_text_out);

/* ---- discharging ----------------------------------------------------- */

/* Runs the exact-rational discharging pipeline (initial charges, rules
 * R1..R9, settle, audit) and returns the ledger and audit JSON documents.
 * delta = 0 uses the graph's maximum degree. *all_pass_out is nonzero when
 * every vertex and face holds nonnegative final charge. Requires a connected
 * genus-0 embedding. */
P5G_API p5g_status p5g_discharge_json(const p5g_graph* g, uint32_t delta, char** ledger_json_out,
                                      char** audit_json_out, int* all_pass_out);

#ifdef __cplusplus
}
#endif

#endif /* P5G_H */
