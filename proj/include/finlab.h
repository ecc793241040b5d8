#ifndef FINLAB_H
#define FINLAB_H

/* C interface to the finite function-space lab. Every call returns a status;
 * on failure lab_last_error() describes it. Strings handed out through
 * `char **out` are owned by the caller and released with lab_string_free. */

#include <stdint.h>

#if defined(FINLAB_BUILDING)
#define FINLAB_API __attribute__((visibility("default")))
#else
#define FINLAB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct lab_instance lab_instance;

typedef enum lab_status {
    LAB_OK = 0,
    LAB_ERR_INVALID_ARGUMENT,
    LAB_ERR_UNKNOWN_POINT,
    LAB_ERR_SPAN_MEMBERSHIP,
    LAB_ERR_NOT_UNIMODULAR,
    LAB_ERR_UNDEFINED_SUPPMAX,
    LAB_ERR_EMPTY_SET,
    LAB_ERR_NORMALIZATION,
    LAB_ERR_FAMILY_SIZE,
    LAB_ERR_NOT_ISOMETRY,
    LAB_ERR_NOT_ONTO,
    LAB_ERR_DIMENSION_MISMATCH,
    LAB_ERR_AMBIGUITY,
    LAB_ERR_NOT_CHOQUET,
    LAB_ERR_THEOREM_VIOLATION,
    LAB_ERR_SCALE_OUT_OF_BOUNDS,
    LAB_ERR_UNKNOWN_SUITE,
    LAB_ERR_PARSE,
    LAB_ERR_INTERNAL
} lab_status;

/* Message for the last failing call on this thread. */
FINLAB_API const char *lab_last_error(void);
FINLAB_API const char *lab_status_name(lab_status status);

FINLAB_API lab_status lab_instance_from_json(const char *text, lab_instance **out);
FINLAB_API lab_status lab_instance_to_json(const lab_instance *instance, char **out);
FINLAB_API void lab_instance_free(lab_instance *instance);
FINLAB_API void lab_string_free(char *text);

/* Requests and results are JSON objects.
 * norm:            {"subspace", "function"} or {"subspace", "functional"}
 * mset:            {"map"} or {"subspace"}
 * boundary:        {"subspace", "points"}
 * sigma:           {"subspace", "family"}
 * verify_isometry: {"map", "onto"?}
 * decompose:       {"map", "strict"?}
 * compose:         {"first", "second", "first_form"?, "second_form"?}
 * invert:          {"map", "form"?}
 * alpha_beta:      {"map"} */
FINLAB_API lab_status lab_norm(const lab_instance *instance, const char *request, char **out);
FINLAB_API lab_status lab_mset(const lab_instance *instance, const char *request, char **out);
FINLAB_API lab_status lab_boundary(const lab_instance *instance, const char *request, char **out);
FINLAB_API lab_status lab_sigma(const lab_instance *instance, const char *request, char **out);
FINLAB_API lab_status lab_verify_isometry(const lab_instance *instance, const char *request, char **out);
FINLAB_API lab_status lab_decompose(const lab_instance *instance, const char *request, char **out);
FINLAB_API lab_status lab_compose(const lab_instance *instance, const char *request, char **out);
FINLAB_API lab_status lab_invert(const lab_instance *instance, const char *request, char **out);
FINLAB_API lab_status lab_alpha_beta(const lab_instance *instance, const char *request, char **out);

/* Suite report as JSON; failing trials carry minimized instances. */
FINLAB_API lab_status lab_run_suite(const char *suite_id, int trials, uint64_t seed, char **out);
/* Newline-separated suite ids. */
FINLAB_API lab_status lab_list_suites(char **out);

/* kind: random_subspace, full_space_pair, isometry_pair, onto_pair,
 * composable_triple. field: "real" or "complex". */
FINLAB_API lab_status lab_generate(const char *kind, uint64_t seed, int max_points, int max_dim,
                                   int coefficient_height, const char *field, char **out);

#ifdef __cplusplus
}
#endif

#endif
