#ifndef QLMASS_H
#define QLMASS_H

/* C interface to the quasi-local mass pipeline. Handles are opaque; every
 * fallible call returns a qlm_status and leaves a message for
 * qlm_last_error() on the calling thread. Strings returned by a handle stay
 * valid until that handle is freed. */

#include <stddef.h>

#if defined(QLM_BUILDING_LIBRARY)
#define QLM_API __attribute__((visibility("default")))
#else
#define QLM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  QLM_OK = 0,
  QLM_ERR_INVALID_ARGUMENT = 1,
  QLM_ERR_CONFIG = 2,
  QLM_ERR_IO = 3,
  QLM_ERR_NUMERIC = 4,
  QLM_ERR_INTERNAL = 5
} qlm_status;

typedef struct qlm_scenario qlm_scenario;
typedef struct qlm_report qlm_report;

/* Optional CSV dumps of earlier stages; NULL or "" entries are recomputed. */
typedef struct {
  const char* collar_csv;
  const char* lapse_csv;
  const char* exterior_csv;
  const char* transport_csv;
} qlm_stage_inputs;

QLM_API const char* qlm_last_error(void);
QLM_API const char* qlm_status_name(qlm_status s);

QLM_API qlm_status qlm_scenario_default(qlm_scenario** out);
QLM_API qlm_status qlm_scenario_load(const char* path, qlm_scenario** out);
/* base_dir resolves relative file references; may be NULL. */
QLM_API qlm_status qlm_scenario_parse(const char* text, const char* base_dir, qlm_scenario** out);
/* key is "section.name", e.g. "flow.t_end". */
QLM_API qlm_status qlm_scenario_set(qlm_scenario* s, const char* key, const char* value);
QLM_API qlm_status qlm_scenario_validate(const qlm_scenario* s);
QLM_API const char* qlm_scenario_config_hash(qlm_scenario* s);
QLM_API void qlm_scenario_free(qlm_scenario* s);

/* stage: flow | lapse | exterior | transport | mass | pipeline. Numerical
 * failures inside a stage are reported through the report's checks, not the
 * status. */
QLM_API qlm_status qlm_run(const qlm_scenario* s, const char* stage,
                           const qlm_stage_inputs* inputs, int write_files, qlm_report** out);

QLM_API int qlm_report_passed(const qlm_report* r);
QLM_API const char* qlm_report_json(const qlm_report* r);
QLM_API const char* qlm_report_config_hash(const qlm_report* r);
/* "" until the mass stage has run. */
QLM_API const char* qlm_report_causal_class(const qlm_report* r);
QLM_API double qlm_report_final_radius(const qlm_report* r);
QLM_API double qlm_report_T(const qlm_report* r);
/* Writes n+1 components (time last); returns the count, 0 before the mass stage. */
QLM_API size_t qlm_report_mass_vector(const qlm_report* r, double* out, size_t capacity);
QLM_API size_t qlm_report_check_count(const qlm_report* r);
QLM_API qlm_status qlm_report_check(const qlm_report* r, size_t i, const char** stage,
                                    const char** name, int* passed, const char** detail);
QLM_API size_t qlm_report_file_count(const qlm_report* r);
QLM_API const char* qlm_report_file(const qlm_report* r, size_t i);
QLM_API void qlm_report_free(qlm_report* r);

#ifdef __cplusplus
}
#endif

#endif
