/* C interface to the orbsplice library.
 *
 * Handles are opaque and owned by the caller; release them with the matching
 * *_free function. Strings returned through char** are heap-allocated and must
 * be released with osq_string_free. On failure every function returns a
 * nonzero status and osq_last_error() describes the failure for the calling
 * thread.
 */
#ifndef ORBSPLICE_H
#define ORBSPLICE_H

#include <stddef.h>

#if defined(_WIN32)
#define OSQ_API __declspec(dllexport)
#else
#define OSQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct osq_graph osq_graph;
typedef struct osq_group osq_group;

typedef enum osq_status {
  OSQ_OK = 0,
  OSQ_ERR_PARSE,
  OSQ_ERR_DUPLICATE_VERTEX,
  OSQ_ERR_UNKNOWN_VERTEX_IN_EDGE,
  OSQ_ERR_NON_POSITIVE_WEIGHT,
  OSQ_ERR_UNKNOWN_VERTEX,
  OSQ_ERR_UNKNOWN_EDGE,
  OSQ_ERR_NOT_BLOW_DOWNABLE,
  OSQ_ERR_NOT_A_TREE,
  OSQ_ERR_SINGULAR_MATRIX,
  OSQ_ERR_NOT_NEGATIVE_DEFINITE,
  OSQ_ERR_DECORATED_INTERIOR,
  OSQ_ERR_NOT_A_LEAF,
  OSQ_ERR_NO_INTERIOR_VERTEX,
  OSQ_ERR_GENERATION_FAILURE,
  OSQ_ERR_NO_NODES,
  OSQ_ERR_CONDITIONS_FAIL,
  OSQ_ERR_INVALID_ARGUMENT,
  OSQ_ERR_INTERNAL
} osq_status;

typedef enum osq_format { OSQ_FORMAT_TEXT = 0, OSQ_FORMAT_JSON = 1 } osq_format;

OSQ_API const char* osq_status_name(osq_status status);
/* Message of the last failure on this thread; empty when none. */
OSQ_API const char* osq_last_error(void);
OSQ_API void osq_string_free(char* s);

/* Graphs */
OSQ_API osq_status osq_graph_parse(const char* text, osq_graph** out);
OSQ_API osq_status osq_graph_load(const char* path, osq_graph** out);
OSQ_API void osq_graph_free(osq_graph* g);
OSQ_API osq_status osq_graph_serialize(const osq_graph* g, char** out);
OSQ_API size_t osq_graph_vertex_count(const osq_graph* g);
OSQ_API osq_status osq_graph_blow_up_free(const osq_graph* g, const char* v, osq_graph** out);
OSQ_API osq_status osq_graph_blow_up_edge(const osq_graph* g, const char* v, const char* w, osq_graph** out);
OSQ_API osq_status osq_graph_blow_down(const osq_graph* g, const char* u, osq_graph** out);

/* Groups */
OSQ_API osq_status osq_discriminant_group(const osq_graph* g, osq_group** out);
OSQ_API osq_status osq_orbifold_homology(const osq_graph* g, osq_group** out);
OSQ_API osq_status osq_projection_kernel(const osq_graph* g, osq_group** out);
OSQ_API void osq_group_free(osq_group* grp);
OSQ_API size_t osq_group_factor_count(const osq_group* grp);
OSQ_API size_t osq_group_free_rank(const osq_group* grp);
/* Decimal string of the k-th invariant factor. */
OSQ_API osq_status osq_group_factor(const osq_group* grp, size_t k, char** out);
/* Decimal string of the order; OSQ_ERR_INVALID_ARGUMENT for infinite groups. */
OSQ_API osq_status osq_group_order(const osq_group* grp, char** out);
OSQ_API osq_status osq_group_format(const osq_group* grp, char** out);

/* Reports. *passed (optional) receives 1 when every check run by the report
 * passed and 0 otherwise. */
OSQ_API osq_status osq_validate(const osq_graph* g, osq_format fmt, char** out, int* passed);
OSQ_API osq_status osq_homology(const osq_graph* g, int orbifold, osq_format fmt, char** out, int* passed);
OSQ_API osq_status osq_linking(const osq_graph* g, osq_format fmt, char** out);
OSQ_API osq_status osq_rep(const osq_graph* g, int orbifold, osq_format fmt, char** out, int* passed);
OSQ_API osq_status osq_splice(const osq_graph* g, int check_semigroup, int check_congruence, osq_format fmt,
                              char** out, int* passed);
/* cap bounds the admissible monomials enumerated per edge; 0 selects the default. */
OSQ_API osq_status osq_equations(const osq_graph* g, int substitute, size_t cap, osq_format fmt, char** out,
                                 int* passed);
OSQ_API osq_status osq_graph_format(const osq_graph* g, osq_format fmt, char** out);
/* DOT text of the decorated graph, or of its splice diagram when splice != 0. */
OSQ_API osq_status osq_render_dot(const osq_graph* g, int splice, char** out);
OSQ_API osq_status osq_invariant_report(const char* name, const osq_graph* g, osq_format fmt, char** out,
                                        int* passed);

#ifdef __cplusplus
}
#endif

#endif
