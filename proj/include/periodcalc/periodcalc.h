/* Copyright 2026 periodcalc contributors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#ifndef PERIODCALC_PERIODCALC_H
#define PERIODCALC_PERIODCALC_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define PC_API __declspec(dllexport)
#else
#define PC_API __attribute__((visibility("default")))
#endif

/* Return codes. Verification FAIL is not an error: the result is still produced. */
enum {
  PC_OK = 0,
  PC_FAIL = 1,
  PC_INPUT_ERROR = 2,
  PC_INTERNAL_ERROR = 3
};

typedef struct pc_scenario pc_scenario;
typedef struct pc_result pc_result;

PC_API const char* pc_version(void);

/* Parses a scenario document (JSON text). */
PC_API int pc_scenario_load(const char* json_text, pc_scenario** out);
PC_API void pc_scenario_free(pc_scenario* scenario);

/* command may be NULL to use the scenario's own; params_json may be NULL.
 * Returns PC_OK or PC_FAIL with *out set, or an error code with *out NULL. */
PC_API int pc_scenario_run(const pc_scenario* scenario, const char* command, const char* params_json,
                           pc_result** out);

/* Strings stay valid until pc_result_free. */
PC_API const char* pc_result_json(const pc_result* result);
PC_API const char* pc_result_text(const pc_result* result);
PC_API const char* pc_result_latex(const pc_result* result);
PC_API const char* pc_result_verdict(const pc_result* result);
PC_API void pc_result_free(pc_result* result);

/* Per-thread details of the last error; empty strings when there was none. */
PC_API const char* pc_last_error(void);
PC_API const char* pc_last_error_code(void);
PC_API const char* pc_last_error_pointer(void);

#ifdef __cplusplus
}
#endif

#endif
