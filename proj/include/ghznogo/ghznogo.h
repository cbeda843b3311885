/*
 * ghznogo — statevector simulation of a two-layer observer chain on a GHZ
 * state, perfect-correlation constraint extraction, and an unsatisfiability
 * proof for ±1 outcome assignments.
 *
 * C API: opaque handles plus status codes. Status codes double as the CLI's
 * exit codes. All returned strings are owned by the handle that produced
 * them and stay valid until that handle is freed.
 */
#ifndef GHZNOGO_H
#define GHZNOGO_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define GHZNOGO_API __declspec(dllexport)
#else
#define GHZNOGO_API __attribute__((visibility("default")))
#endif

typedef enum ghznogo_status {
    GHZNOGO_OK = 0,
    /* Scenario file or argument is syntactically/semantically invalid. */
    GHZNOGO_ERROR_PARSE = 1,
    /* A numeric tolerance check failed (norm drift, residual weight,
     * unstable support classification). */
    GHZNOGO_ERROR_NUMERIC = 2,
    /* The pattern scan found no deterministic correlation. */
    GHZNOGO_ERROR_NO_CONSTRAINTS = 3,
    /* Two independent internal routes disagreed; always a bug. */
    GHZNOGO_ERROR_INTERNAL = 4
} ghznogo_status;

typedef struct ghznogo_scenario ghznogo_scenario;
typedef struct ghznogo_report ghznogo_report;

/* Library version string, e.g. "0.1.0". */
GHZNOGO_API const char* ghznogo_version(void);

/* Message for the calling thread's most recent failure ("" if none).
 * Valid until the next ghznogo_* call on the same thread. */
GHZNOGO_API const char* ghznogo_last_error(void);

/* Parses a UTF-8 JSON scenario description (see README for the schema).
 * On GHZNOGO_OK, *out must be released with ghznogo_scenario_free. */
GHZNOGO_API ghznogo_status ghznogo_scenario_parse(const char* json_text,
                                                  ghznogo_scenario** out);

/* Overrides the scenario's tolerance (flag > file > default precedence is
 * the caller's responsibility). epsilon must be finite and positive. */
GHZNOGO_API ghznogo_status ghznogo_scenario_set_epsilon(ghznogo_scenario* scenario,
                                                        double epsilon);

GHZNOGO_API void ghznogo_scenario_free(ghznogo_scenario* scenario);

/* Full pipeline: scans every basis pattern consistent with the configured
 * plan, extracts probabilities and constraints, and decides the derived
 * constraint system with both decision procedures. */
GHZNOGO_API ghznogo_status ghznogo_run(const ghznogo_scenario* scenario,
                                       ghznogo_report** out);

/* Pattern scan only. Returns GHZNOGO_ERROR_NO_CONSTRAINTS (with *out still
 * populated, so the listing can be shown) when no deterministic correlation
 * exists. */
GHZNOGO_API ghznogo_status ghznogo_constraints(const ghznogo_scenario* scenario,
                                               ghznogo_report** out);

/* Satisfiability proof for the derived constraint system. flip_sign: 1-based
 * index of a constraint whose sign to negate before solving, or 0 for the
 * system as derived. */
GHZNOGO_API ghznogo_status ghznogo_nogo(const ghznogo_scenario* scenario, int flip_sign,
                                        ghznogo_report** out);

/* Deterministic renderings: byte-identical across runs on the same input. */
GHZNOGO_API const char* ghznogo_report_text(const ghznogo_report* report);
GHZNOGO_API const char* ghznogo_report_json(const ghznogo_report* report);

/* Number of deterministic correlations the report derived. */
GHZNOGO_API size_t ghznogo_report_constraint_count(const ghznogo_report* report);

GHZNOGO_API void ghznogo_report_free(ghznogo_report* report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GHZNOGO_H */
