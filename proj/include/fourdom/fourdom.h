#ifndef FOURDOM_H
#define FOURDOM_H

/* C interface to the 1-domination engine. Every call returns a status; on
 * failure fourdom_last_error() describes the problem (thread-local). Strings
 * returned through char** are owned by the caller and released with
 * fourdom_string_free. Handles are released with their *_destroy function. */

#if defined(__GNUC__)
#define FOURDOM_API __attribute__((visibility("default")))
#else
#define FOURDOM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct fourdom_context fourdom_context;
typedef struct fourdom_form fourdom_form;
typedef struct fourdom_manifold fourdom_manifold;
typedef struct fourdom_decision fourdom_decision;

typedef enum fourdom_status {
  FOURDOM_OK = 0,
  FOURDOM_ERR_PARSE,
  FOURDOM_ERR_INVALID_DESCRIPTOR,
  FOURDOM_ERR_NOT_SYMMETRIC,
  FOURDOM_ERR_NOT_UNIMODULAR,
  FOURDOM_ERR_NOT_HERMITIAN,
  FOURDOM_ERR_DEGENERATE,
  FOURDOM_ERR_RANK_MISMATCH,
  FOURDOM_ERR_RANK_TOO_LARGE,
  FOURDOM_ERR_BOUND_TOO_LARGE,
  FOURDOM_ERR_UNSUPPORTED_PI1,
  FOURDOM_ERR_PI1_MISMATCH,
  FOURDOM_ERR_INVALID_ARGUMENT,
  FOURDOM_ERR_INTERNAL
} fourdom_status;

typedef enum fourdom_outcome { FOURDOM_YES = 0, FOURDOM_NO = 1, FOURDOM_UNKNOWN = 2 } fourdom_outcome;

FOURDOM_API const char* fourdom_last_error(void);
FOURDOM_API const char* fourdom_status_name(fourdom_status status);
FOURDOM_API void fourdom_string_free(char* s);

/* The axiom registry is read from FOURDOM_AXIOMS when set. */
FOURDOM_API fourdom_status fourdom_context_create(fourdom_context** out);
FOURDOM_API void fourdom_context_destroy(fourdom_context* ctx);
FOURDOM_API fourdom_status fourdom_context_set_z2_extrapolation(fourdom_context* ctx, int enabled);
FOURDOM_API fourdom_status fourdom_context_set_definite_cap(fourdom_context* ctx, int cap);
FOURDOM_API fourdom_status fourdom_context_load_axioms(fourdom_context* ctx, const char* path);

/* Forms: JSON {"gram": [[...]]} or a name expression ("E8+H", "I(2,1)"). */
FOURDOM_API fourdom_status fourdom_form_parse(const char* text, fourdom_form** out);
FOURDOM_API void fourdom_form_destroy(fourdom_form* f);
FOURDOM_API fourdom_status fourdom_form_classify_json(const fourdom_context* ctx, const fourdom_form* f, char** json);
FOURDOM_API fourdom_status fourdom_form_split_json(const fourdom_context* ctx, const fourdom_form* x, const fourdom_form* y,
                                       char** json);

/* Descriptors: JSON object, built-in name, or "A#B#..." connected sums.
 * Parsing validates; fourdom_manifold_check_json reports violations instead. */
FOURDOM_API fourdom_status fourdom_manifold_parse(const fourdom_context* ctx, const char* text, fourdom_manifold** out);
FOURDOM_API void fourdom_manifold_destroy(fourdom_manifold* m);
FOURDOM_API fourdom_status fourdom_manifold_check_json(const fourdom_context* ctx, const char* text, char** json, int* valid);
FOURDOM_API fourdom_status fourdom_manifold_to_json(const fourdom_manifold* m, char** json);
FOURDOM_API fourdom_status fourdom_manifold_report_json(const fourdom_context* ctx, const fourdom_manifold* m, char** json);
FOURDOM_API fourdom_status fourdom_manifold_decompose_json(const fourdom_manifold* m, char** json);
FOURDOM_API fourdom_status fourdom_manifold_z2_form_json(const fourdom_context* ctx, const fourdom_manifold* m, char** json);
FOURDOM_API fourdom_status fourdom_manifold_stabilize(const fourdom_manifold* m, int k, fourdom_manifold** out);
FOURDOM_API fourdom_status fourdom_manifold_connected_sum(const fourdom_manifold* a, const fourdom_manifold* b,
                                              fourdom_manifold** out);

FOURDOM_API fourdom_status fourdom_dominates(const fourdom_context* ctx, const fourdom_manifold* x, const fourdom_manifold* y,
                                 fourdom_decision** out);
FOURDOM_API fourdom_status fourdom_stably_dominates(const fourdom_context* ctx, const fourdom_manifold* x,
                                        const fourdom_manifold* y, fourdom_decision** out);
/* Euler check and rigidity report for a decided pair; *json is "null" when
 * neither applies. */
FOURDOM_API fourdom_status fourdom_pair_report_json(const fourdom_manifold* x, const fourdom_manifold* y,
                                        const fourdom_decision* d, char** json);
FOURDOM_API fourdom_status fourdom_minimal_target(const fourdom_context* ctx, const fourdom_manifold* x,
                                      fourdom_manifold** target, fourdom_decision** decision);

FOURDOM_API fourdom_outcome fourdom_decision_outcome(const fourdom_decision* d);
FOURDOM_API fourdom_status fourdom_decision_rule(const fourdom_decision* d, char** rule);
FOURDOM_API fourdom_status fourdom_decision_to_json(const fourdom_decision* d, char** json);
FOURDOM_API void fourdom_decision_destroy(fourdom_decision* d);

/* Groups: "1", "Z", "Zn:7", "Ab:2,4", "beta1:2". */
FOURDOM_API fourdom_status fourdom_chi4_json(const char* group, char** json);
FOURDOM_API fourdom_status fourdom_enumerate_simply_connected_json(int bound, char** json);
FOURDOM_API fourdom_status fourdom_enumerate_stable_json(const fourdom_context* ctx, const fourdom_manifold* x, char** json);
FOURDOM_API fourdom_status fourdom_enumerate_zn_json(const fourdom_context* ctx, const fourdom_manifold* x, char** json);
FOURDOM_API fourdom_status fourdom_universal_dominator(int n, fourdom_manifold** out);

#ifdef __cplusplus
}
#endif

#endif
