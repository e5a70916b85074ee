/* C interface to the joints library: exact clique counting, joint sizes,
 * Turan-graph algebra, property checks, sweeps, and the extremal probe.
 *
 * All functions return a joints_status; out-parameters are written only on
 * JOINTS_OK. Strings returned through char** are heap-allocated and must be
 * released with joints_string_free. Graph handles are opaque and must be
 * released with joints_graph_free. joints_last_error() describes the most
 * recent failure on the calling thread.
 *
 * Counts are decimal strings (arbitrary precision), rationals are "num/den"
 * strings; check/sweep/probe results are the line-oriented report text
 * described in the README ("schema: 1" key-value format).
 */
#ifndef JOINTS_JOINTS_H
#define JOINTS_JOINTS_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum joints_status {
    JOINTS_OK = 0,
    JOINTS_ERR_INVALID_ARGUMENT = 1,
    JOINTS_ERR_PARSE = 2,
    JOINTS_ERR_VIOLATION = 3, /* a check or sweep produced a violated verdict */
    JOINTS_ERR_INTERNAL = 4
} joints_status;

typedef struct joints_graph joints_graph;

const char* joints_last_error(void);
void joints_string_free(char* text);
void joints_graph_free(joints_graph* graph);

/* --- construction and serialization ------------------------------------ */

joints_status joints_graph_parse_graph6(const char* line, joints_graph** out);
/* Accepts either graph6 or edge-list text, sniffing the format. */
joints_status joints_graph_parse(const char* text, joints_graph** out);
joints_status joints_graph_write_graph6(const joints_graph* graph, char** out);

joints_status joints_gen_turan(unsigned n, unsigned r, joints_graph** out);
joints_status joints_gen_turan_plus_edge(unsigned n, unsigned r, joints_graph** out);
joints_status joints_gen_multipartite(const unsigned* sizes, size_t count, joints_graph** out);
/* p is a rational string, e.g. "1/2". */
joints_status joints_gen_gnp(unsigned n, const char* p, uint64_t seed, joints_graph** out);
joints_status joints_gen_gnm(unsigned n, uint64_t m, uint64_t seed, joints_graph** out);

unsigned joints_graph_order(const joints_graph* graph);
uint64_t joints_graph_edge_count(const joints_graph* graph);

/* --- counting ----------------------------------------------------------- */

joints_status joints_count_cliques(const joints_graph* graph, unsigned order, unsigned threads,
                                   char** count_decimal);
/* Comma-separated k_0..k_omega. */
joints_status joints_clique_vector(const joints_graph* graph, char** counts_csv);
/* Report text with the witness edge; order >= 3. */
joints_status joints_joint_size(const joints_graph* graph, unsigned order, unsigned threads,
                                char** report_text);

/* --- checks, sweeps, probe ---------------------------------------------- */

/* property: moon-moser | lemma1 | lemma2 | theorem1 | ourb0 | bol76 | zykov.
 * r, s: 0 means "not supplied" (property-dependent defaults / grids).
 * alpha: rational string or NULL; variant: "stated_r3" | "proof_r4" | NULL.
 * Emits one report per check performed (moon-moser yields one per (s,t) pair).
 * Returns JOINTS_ERR_VIOLATION if any verdict is violated; the report text is
 * still written in that case. */
joints_status joints_check(const joints_graph* graph, const char* property, unsigned r, unsigned s,
                           const char* alpha, const char* variant, char** reports_text);

/* properties: comma-separated property names. r/s/alpha as in joints_check;
 * alpha NULL selects the documented default grid. */
joints_status joints_sweep_exhaustive(unsigned n, const char* properties, unsigned r, unsigned s,
                                      const char* alpha, const char* variant, unsigned threads,
                                      char** summary_text);

/* model: "gnp" (uses p) or "gnm" (uses m). */
joints_status joints_sweep_random(unsigned n, const char* model, const char* p, uint64_t m,
                                  uint64_t trials, uint64_t seed, const char* properties,
                                  unsigned r, unsigned s, const char* alpha, const char* variant,
                                  unsigned threads, char** summary_text);

/* Result text includes the best graph in graph6; the result is re-validated
 * with fresh engine calls before returning. */
joints_status joints_probe(unsigned n, unsigned r, unsigned s, uint64_t steps, uint64_t seed,
                           unsigned restarts, unsigned threads, char** result_text);

#ifdef __cplusplus
}
#endif

#endif /* JOINTS_JOINTS_H */
