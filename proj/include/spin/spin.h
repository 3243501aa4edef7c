/*
 * C interface to the limit r-spin toolkit.
 *
 * Opaque handles own parsed inputs; every call returns a spin_status.  On
 * success, results are written as freshly allocated JSON text through the
 * `out_json` argument and must be released with spin_string_free().  On
 * failure, spin_last_error() returns the structured error object
 *   {"error": {"kind": "domain" | "input" | "internal", "message": ..., "details": ...}}
 * for the calling thread, valid until that thread's next call.
 *
 * Ring elements are passed as JSON text: an expression string ("\"1 + t^2\""),
 * an integer, or a monomial map ({"2,0": "1/3"}).  Bare expression text that
 * is not valid JSON is accepted as an expression.
 */
#ifndef SPIN_SPIN_H
#define SPIN_SPIN_H

#include <stddef.h>

#if defined(SPIN_BUILDING_LIBRARY)
#define SPIN_API __attribute__((visibility("default")))
#else
#define SPIN_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum spin_status {
  SPIN_OK = 0,
  SPIN_ERROR_DOMAIN = 1,   /* mathematical precondition failed */
  SPIN_ERROR_INPUT = 2,    /* malformed input or schema violation */
  SPIN_ERROR_INTERNAL = 3
} spin_status;

typedef struct spin_ring spin_ring;
typedef struct spin_graph spin_graph;

SPIN_API const char* spin_version(void);
SPIN_API const char* spin_last_error(void);
SPIN_API void spin_string_free(char* s);

/* Coefficient rings k[t_1..t_m]/(monomial ideal). */
SPIN_API spin_status spin_ring_from_json(const char* json, spin_ring** out);
SPIN_API void spin_ring_free(spin_ring* ring);
SPIN_API spin_status spin_ring_dimension(const spin_ring* ring, size_t* out);
SPIN_API spin_status spin_ring_normalize(const spin_ring* ring, const char* element, char** out_json);
SPIN_API spin_status spin_ring_is_unit(const spin_ring* ring, const char* element, int* out);
SPIN_API spin_status spin_ring_invert(const spin_ring* ring, const char* element, char** out_json);
SPIN_API spin_status spin_ring_rth_root(const spin_ring* ring, const char* element, unsigned r,
                                        const char* root0, char** out_json);
/* {"lambda": elt} or {"lambda": null}. */
SPIN_API spin_status spin_ring_associate(const spin_ring* ring, const char* a, const char* b,
                                         char** out_json);

/* Dual graphs of stable curves with spin order r. */
SPIN_API spin_status spin_graph_from_json(const char* json, spin_graph** out);
SPIN_API void spin_graph_free(spin_graph* graph);
SPIN_API spin_status spin_graph_validate(const spin_graph* graph, char** out_json);
SPIN_API spin_status spin_graph_enumerate(const spin_graph* graph, char** out_json);
SPIN_API spin_status spin_graph_aut(const spin_graph* graph, char** out_json);
SPIN_API spin_status spin_graph_count(const spin_graph* graph, char** out_json);
/* type_json may be NULL to emit a presentation for every spin type. */
SPIN_API spin_status spin_graph_deform(const spin_graph* graph, const char* type_json, char** out_json);

/* Local models at a node. */
SPIN_API spin_status spin_local_classify(const char* request_json, char** out_json);
SPIN_API spin_status spin_local_isomorphic(const char* request_json, char** out_json);
SPIN_API spin_status spin_local_make(const char* request_json, char** out_json);

/* Degeneration. */
SPIN_API spin_status spin_chain(unsigned r, unsigned n, unsigned residue, char** out_json);
SPIN_API spin_status spin_limit(const char* family_json, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* SPIN_SPIN_H */
