#ifndef RGSURF_H
#define RGSURF_H

/* C interface to the rgsurf library. Every entry point returns an
 * rgs_status; on failure rgs_last_error() describes the problem for the
 * calling thread. Reports and groups are opaque and owned by the caller. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(RGS_BUILDING_LIBRARY)
#define RGS_API __attribute__((visibility("default")))
#else
#define RGS_API
#endif

typedef enum rgs_status {
  RGS_OK = 0,
  RGS_DOMAIN_ERROR = 1,      /* bad input or violated precondition */
  RGS_THEOREM_VIOLATION = 2, /* an identity that must hold failed */
  RGS_INVALID_ARGUMENT = 3,  /* null pointer, malformed JSON */
  RGS_LIMIT_EXCEEDED = 4,
  RGS_INTERNAL_ERROR = 5
} rgs_status;

enum { RGS_FLAG_TIMING = 1 };

typedef struct rgs_report rgs_report;
typedef struct rgs_group rgs_group;

RGS_API const char *rgs_version(void);
RGS_API const char *rgs_status_name(rgs_status status);
RGS_API const char *rgs_last_error(void);

/* Generic entry: command is one of exc, reduce, weyl, invariants, conic,
 * cone, hexagon, selftest; inputs_json is the command's inputs object. */
RGS_API rgs_status rgs_run(const char *command, const char *inputs_json, int threads, int flags,
                           rgs_report **out);

/* max_degree < 0 means no bound (N <= 8 only). */
RGS_API rgs_status rgs_run_exc(int n, long long max_degree, rgs_report **out);
/* class_json: array of integers or "p/q" strings (raw coordinates). */
RGS_API rgs_status rgs_run_reduce(const char *class_json, rgs_report **out);
/* method: "auto", "closure" or "chain"; NULL means "auto". */
RGS_API rgs_status rgs_run_weyl(int n, const char *method, int threads, rgs_report **out);
RGS_API rgs_status rgs_run_cone(int n, long long a_min, rgs_report **out);
/* kind: "Gn", "GnTilde", "Gnks" or "Gn32Tilde". */
RGS_API rgs_status rgs_run_hexagon(const char *kind, long long n, long long k, long long s, int verify,
                                   rgs_report **out);
RGS_API rgs_status rgs_run_selftest(int threads, rgs_report **out);

/* Validated generator list from a JSON array of square integer matrices.
 * n <= 0 infers N from the matrix size. */
RGS_API rgs_status rgs_group_from_json(const char *matrices_json, int n, rgs_group **out);
RGS_API int rgs_group_n(const rgs_group *g);
RGS_API size_t rgs_group_generator_count(const rgs_group *g);
RGS_API void rgs_group_free(rgs_group *g);

RGS_API rgs_status rgs_run_invariants(const rgs_group *g, int threads, rgs_report **out);
RGS_API rgs_status rgs_run_conic(const rgs_group *g, int g0_order, int threads, rgs_report **out);

/* Full report and its results section, valid until rgs_report_free. */
RGS_API const char *rgs_report_json(const rgs_report *r);
RGS_API const char *rgs_report_results_json(const rgs_report *r);
RGS_API void rgs_report_free(rgs_report *r);

#ifdef __cplusplus
}
#endif

#endif
