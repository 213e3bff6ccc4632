/*
 * C interface to the posetdist library.
 *
 * Objects are opaque handles released with their matching *_free call.
 * Every fallible function returns a pd_status; on failure a description is
 * available from pd_last_error() on the calling thread until the next call
 * into the library from that thread. Strings returned through char** out
 * parameters are owned by the caller and released with pd_string_free().
 */
#ifndef POSETDIST_H
#define POSETDIST_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PD_API __declspec(dllexport)
#else
#define PD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pd_status {
  PD_OK = 0,
  PD_ERR_PARSE,
  PD_ERR_CYCLE_DETECTED,
  PD_ERR_DUPLICATE_ELEMENT,
  PD_ERR_EMPTY_NAME,
  PD_ERR_INVALID_NAME,
  PD_ERR_EMPTY_POSET,
  PD_ERR_UNKNOWN_ELEMENT,
  PD_ERR_NOT_COMPARABLE,
  PD_ERR_NO_UPPER_BOUND,
  PD_ERR_NO_LEAST_UPPER_BOUND,
  PD_ERR_NO_LOWER_BOUND,
  PD_ERR_NOT_A_JOIN_SEMILATTICE,
  PD_ERR_DISCONNECTED,
  PD_ERR_DISTANCE_UNDEFINED,
  PD_ERR_NOT_A_TREE_ORDER,
  PD_ERR_INVALID_PARAMETER,
  PD_ERR_SIZE_CAP_EXCEEDED,
  PD_ERR_IO,
  PD_ERR_NULL_ARGUMENT,
  PD_ERR_INTERNAL
} pd_status;

typedef enum pd_distance_kind {
  PD_ZIGZAG = 0,
  PD_UP_DOWN = 1,
  PD_DOWN_UP = 2,
  PD_CHEBYSHEV = 3
} pd_distance_kind;

typedef enum pd_format { PD_FORMAT_TEXT = 0, PD_FORMAT_JSON = 1 } pd_format;

typedef struct pd_poset pd_poset;

typedef struct pd_structural_report {
  int connected;
  int upper_filtering;
  int lower_filtering;
  int join_semilattice;
  int lattice;
  int tree_order;
  int semimodular;
  int jordan_dedekind;
  size_t element_count;
  size_t cover_edge_count;
} pd_structural_report;

typedef struct pd_kinship_result {
  const char* ancestor; /* valid while the poset handle lives */
  uint32_t h_ego;
  uint32_t h_alter;
  uint32_t civil;
  uint32_t canon;
} pd_kinship_result;

/* Receives each enumerated poset; the handle is only valid during the call.
 * Returning nonzero stops the enumeration. */
typedef int (*pd_poset_visitor)(const pd_poset* poset, const char* canonical_code_hex, void* user);

PD_API const char* pd_status_name(pd_status status);
PD_API const char* pd_last_error(void);
PD_API void pd_string_free(char* s);

/* Construction */
PD_API pd_status pd_poset_parse(const char* text, pd_poset** out);
PD_API pd_status pd_poset_load(const char* path, pd_poset** out);
/* FAMILYSPEC strings such as "boolean:3" or "random:8:0.3:42"; a random spec
 * without a seed uses default_seed. */
PD_API pd_status pd_poset_generate(const char* family_spec, uint64_t default_seed, pd_poset** out);
PD_API pd_status pd_poset_dual(const pd_poset* poset, pd_poset** out);
PD_API void pd_poset_free(pd_poset* poset);

/* Inspection */
PD_API size_t pd_poset_size(const pd_poset* poset);
PD_API const char* pd_poset_element_name(const pd_poset* poset, size_t index);
/* Poset file text (covers sorted by name), or a JSON element/cover listing. */
PD_API pd_status pd_poset_render(const pd_poset* poset, char** out);
PD_API pd_status pd_poset_render_json(const pd_poset* poset, char** out);
PD_API pd_status pd_poset_leq(const pd_poset* poset, const char* x, const char* y, int* out);
PD_API pd_status pd_poset_height(const pd_poset* poset, const char* x, const char* y, uint32_t* out);
PD_API pd_status pd_poset_join(const pd_poset* poset, const char* x, const char* y, const char** out);
PD_API pd_status pd_poset_canonical_code(const pd_poset* poset, char** out_hex);

PD_API pd_status pd_poset_report(const pd_poset* poset, pd_structural_report* out);
PD_API pd_status pd_poset_report_render(const pd_poset* poset, pd_format format, char** out);

/* Distances */
PD_API pd_status pd_parse_distance_kind(const char* text, pd_distance_kind* out);
PD_API pd_status pd_distance(const pd_poset* poset, pd_distance_kind kind, const char* x, const char* y,
                             uint32_t* out);
PD_API pd_status pd_distance_render(const pd_poset* poset, pd_distance_kind kind, const char* x, const char* y,
                                    pd_format format, char** out);
/* out_count receives the number of violating ordered triples. */
PD_API pd_status pd_triangle_violations(const pd_poset* poset, pd_distance_kind kind, pd_format format,
                                        size_t* out_count, char** out);
PD_API pd_status pd_maximal_chains(const pd_poset* poset, pd_format format, size_t* out_count, char** out);
PD_API pd_status pd_chain_compatibility(const pd_poset* poset, pd_distance_kind kind, pd_format format,
                                        int* out_compatible, char** out);
PD_API pd_status pd_compare_distances(const pd_poset* poset, pd_format format, char** out);
PD_API pd_status pd_kinship(const pd_poset* poset, const char* ego, const char* alter, pd_kinship_result* out);
PD_API pd_status pd_kinship_render(const pd_poset* poset, const char* ego, const char* alter, pd_format format,
                                   char** out);

/* Enumeration and verification. jobs == 0 uses the hardware concurrency;
 * results never depend on jobs. filter may be NULL or "" for no filter. */
PD_API pd_status pd_enumerate(unsigned n, const char* filter, unsigned jobs, pd_poset_visitor visitor, void* user,
                              size_t* out_count);
PD_API pd_status pd_enumerate_render(unsigned n, const char* filter, unsigned jobs, pd_format format,
                                     size_t* out_count, char** out);
/* proposition: "P1".."P5" or "cheb-search". out_witnesses receives the number
 * of witnesses in the report. */
PD_API pd_status pd_verify(const char* proposition, unsigned n_max, unsigned jobs, pd_format format, int* out_holds,
                           size_t* out_witnesses, char** out);

#ifdef __cplusplus
}
#endif

#endif /* POSETDIST_H */
