/* C interface to the r-pseudoforest deletion solver.
 *
 * All handles are opaque; every fallible call returns a pfd_status and
 * writes results through out-parameters.  Strings returned through char**
 * are heap-allocated and must be released with pfd_text_free.
 */
#ifndef PFD_H
#define PFD_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pfd_status {
  PFD_OK = 0,
  PFD_ERR_ARGUMENT = 1,     /* bad parameter value */
  PFD_ERR_VERTEX = 2,       /* dead or unknown vertex id */
  PFD_ERR_PRECONDITION = 3, /* operation precondition violated */
  PFD_ERR_PARSE = 4,        /* malformed instance text */
  PFD_ERR_TOO_LARGE = 5,    /* enumeration guard refused the input */
  PFD_ERR_INTERNAL = 6      /* invariant broken; indicates a bug */
} pfd_status;

typedef struct pfd_graph pfd_graph;
typedef struct pfd_instance pfd_instance;
typedef struct pfd_result pfd_result;

/* ---- multigraph ---- */

pfd_graph* pfd_graph_new(void);
pfd_graph* pfd_graph_copy(const pfd_graph* g);
void pfd_graph_free(pfd_graph* g);

/* Returns the fresh vertex id; ids are dense and never reused. */
uint32_t pfd_graph_add_vertex(pfd_graph* g);
pfd_status pfd_graph_add_edge(pfd_graph* g, uint32_t u, uint32_t v,
                              uint32_t count);
pfd_status pfd_graph_delete_vertex(pfd_graph* g, uint32_t v);
pfd_status pfd_graph_bypass(pfd_graph* g, uint32_t v);

uint32_t pfd_graph_vertex_count(const pfd_graph* g);
uint64_t pfd_graph_edge_count(const pfd_graph* g);
pfd_status pfd_graph_degree(const pfd_graph* g, uint32_t v, uint64_t* out);
pfd_status pfd_graph_loops_at(const pfd_graph* g, uint32_t v, uint32_t* out);
pfd_status pfd_graph_multiplicity(const pfd_graph* g, uint32_t u, uint32_t v,
                                  uint32_t* out);

/* *out becomes 1 when every component needs at most r edge removals. */
pfd_status pfd_is_r_pseudoforest(const pfd_graph* g, uint32_t r, int* out);

/* ---- instances ---- */

/* Copies the graph; requires r >= 1 and k >= 0. */
pfd_status pfd_instance_new(const pfd_graph* g, uint32_t r, int64_t k,
                            pfd_instance** out);
/* On parse failure fills errbuf (when given) with the reason. */
pfd_status pfd_instance_parse(const char* text, pfd_instance** out,
                              char* errbuf, size_t errbuf_size);
pfd_status pfd_instance_render(const pfd_instance* inst, char** out);
const pfd_graph* pfd_instance_graph(const pfd_instance* inst);
uint32_t pfd_instance_r(const pfd_instance* inst);
int64_t pfd_instance_k(const pfd_instance* inst);
void pfd_instance_free(pfd_instance* inst);

/* ---- solving ---- */

pfd_status pfd_solve_decision(const pfd_instance* inst, unsigned threads,
                              pfd_result** out);
pfd_status pfd_solve_minimize(const pfd_graph* g, uint32_t r, int64_t kmax,
                              unsigned threads, pfd_result** out);
/* Brute-force reference search; cap -1 means unbounded. */
pfd_status pfd_oracle_min(const pfd_graph* g, uint32_t r, int64_t k_cap,
                          pfd_result** out);

/* Runs the reduction rules to a fixpoint.  When the budget proves the
 * instance infeasible, *definite_no becomes 1 and *reduced stays NULL.
 * trace_text receives one RULE<i> line per firing (may be empty). */
pfd_status pfd_reduce(const pfd_instance* inst, pfd_instance** reduced,
                      char** trace_text, int* definite_no);

/* ---- generators ---- */

typedef struct pfd_gen_spec {
  uint64_t seed;
  uint32_t n;
  uint32_t edges; /* edge instances to place (random mode) */
  double loop_rate;
  double multi_rate;
  uint32_t r;
  uint32_t planted_k;
} pfd_gen_spec;

pfd_status pfd_gen_random(const pfd_gen_spec* spec, pfd_graph** out);
/* planted_buf, when non-NULL, must hold planted_k entries. */
pfd_status pfd_gen_planted(const pfd_gen_spec* spec, pfd_graph** out,
                           uint32_t* planted_buf);

/* ---- results ---- */

int pfd_result_answer(const pfd_result* res);
int64_t pfd_result_opt(const pfd_result* res); /* -1 when not found */
size_t pfd_result_solution_size(const pfd_result* res);
const uint32_t* pfd_result_solution_data(const pfd_result* res);
uint64_t pfd_result_branch_nodes(const pfd_result* res);
uint64_t pfd_result_fallback_calls(const pfd_result* res);
uint32_t pfd_result_peak_depth(const pfd_result* res);
/* rule is 1-based (1..6). */
uint64_t pfd_result_rule_firings(const pfd_result* res, int rule);
void pfd_result_free(pfd_result* res);

/* Search-tree size guarantee (10k+1)^k, saturating at UINT64_MAX. */
uint64_t pfd_node_bound(int64_t k);

void pfd_text_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* PFD_H */
