#ifndef HAGGE_H
#define HAGGE_H

/* Generated from the Rust sources; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Backend selector for constructions.
typedef enum HsBackend {
  HS_BACKEND_RATIONAL = 0,
  HS_BACKEND_FLOAT = 1,
} HsBackend;

// Status codes returned by every fallible entry point.
typedef enum HsStatus {
  // Success; output parameters are valid.
  HS_STATUS_OK = 0,
  // A required pointer argument was null.
  HS_STATUS_NULL_ARGUMENT = 1,
  // A string argument was not valid UTF-8.
  HS_STATUS_INVALID_UTF8 = 2,
  // A script or number failed to parse; see stderr for details.
  HS_STATUS_PARSE_ERROR = 3,
  // The construction rejected the input (degenerate configuration).
  HS_STATUS_CONSTRUCTION_ERROR = 4,
  // An unexpected internal failure.
  HS_STATUS_INTERNAL = 5,
} HsStatus;

// Opaque verification report. Inspect it through `hs_report_passed` and
// `hs_report_json`.
typedef struct HsReport HsReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Run one verification suite (`"hagge"`, `"speckman"`, or `"section8"`)
// over `instances` seeded random instances.
//
// # Safety
// `suite` must be a valid NUL-terminated string and `out` a valid pointer.
enum HsStatus hs_suite_run(const char *suite,
                           uintptr_t instances,
                           uint64_t seed,
                           enum HsBackend backend,
                           struct HsReport **out);

// Parse and execute a construction script; the report carries one entry
// per assertion or failed statement.
//
// # Safety
// `source` must be a valid NUL-terminated string and `out` a valid pointer.
enum HsStatus hs_run_script(const char *source, enum HsBackend backend, struct HsReport **out);

// Audit the closed-form coordinate model at rational parameters given as
// `p/q` strings. Audit mismatches are recorded in the report and do not
// affect `hs_report_passed`.
//
// # Safety
// All string arguments must be valid NUL-terminated strings and `out` a
// valid pointer.
enum HsStatus hs_oracle8(const char *v,
                         const char *w,
                         const char *m,
                         const char *k,
                         struct HsReport **out);

// True when every check in the report passed.
//
// # Safety
// `report` must be a pointer returned by a constructor and not yet freed.
bool hs_report_passed(const struct HsReport *report);

// Canonical JSON for the report. The caller owns the returned string and
// must release it with `hs_string_free`. Returns null on null input.
//
// # Safety
// `report` must be a pointer returned by a constructor and not yet freed.
char *hs_report_json(const struct HsReport *report);

// Release a report handle. Null is ignored.
//
// # Safety
// `report` must be null or a pointer returned by a constructor, freed at
// most once.
void hs_report_free(struct HsReport *report);

// Release a string returned by `hs_report_json`. Null is ignored.
//
// # Safety
// `s` must be null or a pointer returned by `hs_report_json`, freed at
// most once.
void hs_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HAGGE_H */
