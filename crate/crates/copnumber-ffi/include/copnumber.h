/* C interface to the copnumber pursuit-evasion library.
 *
 * Status codes follow the CLI exit contract: 0 success, 2 bad input,
 * 3 over a budget or capability limit, 4 illegal policy action, 1 internal.
 * Failing calls leave a message readable via cn_last_error(); the pointer
 * stays valid until the next failing call on the same thread.
 */

#ifndef COPNUMBER_H
#define COPNUMBER_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define CN_OK 0
#define CN_ERR_INTERNAL 1
#define CN_ERR_INPUT 2
#define CN_ERR_LIMIT 3
#define CN_ERR_POLICY 4

/* Opaque immutable graph handle. */
typedef struct CnGraph CnGraph;

/* Library version, e.g. "0.1.0". Static storage. */
const char *cn_version(void);

/* Message of the most recent failure on this thread. */
const char *cn_last_error(void);

/* Parses the text graph format (header "n m", one "u v" line per edge,
 * '#' comments allowed) and stores a new handle in *out. */
int32_t cn_graph_from_text(const char *text, CnGraph **out);

/* Releases a handle; null is a no-op. */
void cn_graph_free(CnGraph *g);

/* Vertex / edge counts; 0 for a null handle. */
size_t cn_graph_vertex_count(const CnGraph *g);
size_t cn_graph_edge_count(const CnGraph *g);

/* Exact cop number into *out. state_budget caps the solver state space
 * (0 = default). Returns CN_ERR_LIMIT when the instance does not fit. */
int32_t cn_cop_number(const CnGraph *g, uint64_t state_budget, size_t *out);

/* Whether k cops win; writes 1 or 0 into *out. */
int32_t cn_cops_win(const CnGraph *g, size_t k, uint64_t state_budget,
                    int32_t *out);

/* Certified bracket lo <= cop number <= hi from every applicable bound. */
int32_t cn_bounds(const CnGraph *g, size_t *lo, size_t *hi);

#ifdef __cplusplus
}
#endif

#endif /* COPNUMBER_H */
