/*
 * ababfree — (AB)^l-free hypergraph detection, 3-coloring, and geometric
 * realization by stabbed pseudo-disks.
 *
 * C API: opaque handles + status codes. All strings are UTF-8, NUL
 * terminated. Strings returned through out-parameters are heap-allocated by
 * the library and must be released with abf_string_free. On any status
 * other than ABF_OK, abf_last_error() describes the failure (thread-local).
 *
 * Status ABF_FALSIFIED is not an error: it reports that a queried property
 * does not hold (a forbidden alternation exists, no coloring/order exists,
 * a coloring is improper, ...). Out-parameters are still populated where
 * documented.
 */
#ifndef ABABFREE_ABABFREE_H
#define ABABFREE_ABABFREE_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum abf_status {
    ABF_OK = 0,
    ABF_FALSIFIED = 2,
    ABF_ERR_PARSE = 10,
    ABF_ERR_INVALID = 11,
    ABF_ERR_GUARD = 12,
    ABF_ERR_DEGENERATE = 13,
    ABF_ERR_INTERNAL = 14
} abf_status;

typedef struct abf_hypergraph abf_hypergraph; /* opaque */
typedef struct abf_scene abf_scene;           /* opaque */

/* ------------------------------------------------------------------ */
/* Memory and diagnostics                                             */
/* ------------------------------------------------------------------ */

void abf_string_free(char* s);
void abf_hypergraph_free(abf_hypergraph* hg);
void abf_scene_free(abf_scene* scene);

/* Message for the most recent failing call on this thread ("" if none). */
const char* abf_last_error(void);

/* ------------------------------------------------------------------ */
/* Hypergraphs                                                        */
/* ------------------------------------------------------------------ */

/* Wire format: {"vertices":["a",...],"edges":[[0,1],...]}. */
abf_status abf_hypergraph_parse(const char* json, abf_hypergraph** out);
abf_status abf_hypergraph_serialize(const abf_hypergraph* hg, char** out_json);
int abf_hypergraph_vertex_count(const abf_hypergraph* hg);
int abf_hypergraph_edge_count(const abf_hypergraph* hg);

/* ------------------------------------------------------------------ */
/* Alternation patterns ("l" is a half-integer string: "2", "2.5")    */
/* ------------------------------------------------------------------ */

/* ABF_OK: free (out_json = {"free":true}). ABF_FALSIFIED: violation with
 * witness (out_json = {"free":false,"edge_a":...,"edge_b":...,"witness":...}). */
abf_status abf_check_free(const abf_hypergraph* hg, const char* l, char** out_json);

/* ABF_OK: {"order":[...]} — first vertex order (lexicographic permutation
 * search, vertex_count <= 10) making the hypergraph free. ABF_FALSIFIED:
 * {"order":null}. */
abf_status abf_find_free_order(const abf_hypergraph* hg, const char* l, char** out_json);

/* ------------------------------------------------------------------ */
/* Coloring                                                           */
/* ------------------------------------------------------------------ */

/* Proper 3-coloring of an ABAB-free input; {"colors":[...],"palette":k}.
 * verify_input != 0 first runs the l = 2 check and reports ABF_FALSIFIED
 * with the violation JSON. Without it, an input that defeats the pipeline's
 * certificates yields ABF_FALSIFIED with a message. */
abf_status abf_three_color(const abf_hypergraph* hg, int verify_input, char** out_json);

/* Exhaustive search, num_colors^n <= 1e8. ABF_OK: coloring JSON;
 * ABF_FALSIFIED: no proper coloring ("none"). */
abf_status abf_oracle_color(const abf_hypergraph* hg, int num_colors, char** out_json);

/* ABF_OK: coloring is proper for hg; ABF_FALSIFIED: it is not. */
abf_status abf_check_coloring(const abf_hypergraph* hg, const char* coloring_json);

/* ------------------------------------------------------------------ */
/* Constructions                                                      */
/* ------------------------------------------------------------------ */

/* Full a-ary tree with b levels: children hyperedges + root-to-leaf
 * hyperedges over the DFS order. */
abf_status abf_generate_tree(int arity, int levels, abf_hypergraph** out);

/* Recursive non-c-colorable construction (c, m >= 2; <= 1e6 vertices). */
abf_status abf_generate_hc(int c, int m, abf_hypergraph** out);

/* Exact vertex count of the above as a decimal string (no size guard). */
abf_status abf_hc_vertex_count(int c, int m, char** out_decimal);

/* ------------------------------------------------------------------ */
/* Geometry (scenes carry points/curves/disks/polygons/stab/colors)   */
/* ------------------------------------------------------------------ */

abf_status abf_scene_parse(const char* json, abf_scene** out);
abf_status abf_scene_serialize(const abf_scene* scene, char** out_json);

/* Points + curves -> "on or above" hypergraph. */
abf_status abf_hypergraph_from_curves(const abf_scene* scene, abf_hypergraph** out);

/* (AB)^l-free hypergraph -> points + curves with pairwise crossings
 * <= 2l-2; ABF_FALSIFIED (violation described by abf_last_error()) when
 * the input is not free. */
abf_status abf_realize_curves(const abf_hypergraph* hg, const char* l, abf_scene** out);

/* Same vertical order at both infinities; points pass through. */
abf_status abf_evenize(const abf_scene* scene, abf_scene** out);

/* Even pseudo-parabolas -> closed polygons + stab point. */
abf_status abf_compactify(const abf_scene* scene, abf_scene** out);

/* Points + disks + stab -> trace hypergraph in angular order. */
abf_status abf_hypergraph_from_disks(const abf_scene* scene, abf_hypergraph** out);

/* Points + stab -> every disk-realizable trace; witness disks optionally
 * returned as a scene (pass NULL to skip). */
abf_status abf_enumerate_disks(const abf_scene* scene, abf_hypergraph** out,
                               abf_scene** witnesses_out);

/* Deterministic SVG; colors_json may be NULL or {"colors":[...]}. */
abf_status abf_render_svg(const abf_scene* scene, const char* colors_json, char** out_svg);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif
