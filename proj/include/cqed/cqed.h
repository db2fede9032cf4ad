// Copyright 2026 The cqedsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface of the cqed simulator.
 *
 * Every function returning int returns a status code (CQED_OK on success);
 * the message of the most recent failure on the calling thread is available
 * from cqed_last_error(). Handles are opaque and released with the matching
 * *_free function. Strings returned through char** are released with
 * cqed_string_free; const char* results are owned by their handle. */

#ifndef CQED_CQED_H_
#define CQED_CQED_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CQED_API __declspec(dllexport)
#else
#define CQED_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

enum cqed_status {
  CQED_OK = 0,
  CQED_ERR_INVALID_CONFIG = 1,
  CQED_ERR_DOMAIN = 2,
  CQED_ERR_ULTRASTRONG = 3,
  CQED_ERR_UNSTABLE = 4,
  CQED_ERR_NEGATIVE_SOLUTION = 5,
  CQED_ERR_SOLVER_FAILURE = 6,
  CQED_ERR_DEGENERATE_SPECTRUM = 7,
  CQED_ERR_HARMONIC_DEGENERACY = 8,
  CQED_ERR_DEGENERATE_REGIME = 9,
  CQED_ERR_RESOURCE = 10,
  CQED_ERR_CONTRACT = 11,
  CQED_ERR_UNSUPPORTED = 12,
  CQED_ERR_IO = 13,
  CQED_ERR_NULL_ARGUMENT = 100,
  CQED_ERR_INTERNAL = 101
};

typedef struct cqed_config cqed_config;
typedef struct cqed_grid cqed_grid;
typedef struct cqed_result cqed_result;

CQED_API const char* cqed_version(void);
CQED_API const char* cqed_status_name(int status);
CQED_API const char* cqed_last_error(void);
CQED_API void cqed_string_free(char* s);

/* Configuration */
CQED_API int cqed_config_new_default(cqed_config** out);
CQED_API int cqed_config_load(const char* path, cqed_config** out);
CQED_API int cqed_config_parse(const char* json, cqed_config** out);
/* "dotted.key=value"; value is read as JSON when it parses, else as a string. */
CQED_API int cqed_config_set(cqed_config* config, const char* assignment);
CQED_API int cqed_config_set_output_dir(cqed_config* config, const char* dir);
CQED_API int cqed_config_set_seed(cqed_config* config, uint64_t seed);
CQED_API int cqed_config_to_json(const cqed_config* config, char** out_json);
CQED_API void cqed_config_free(cqed_config* config);

/* Single observable at the configuration's base point. The return value is
 * the point's status (for example CQED_ERR_ULTRASTRONG for a masked point). */
CQED_API int cqed_evaluate(const cqed_config* config, const char* observable, double* out_value);

/* Sweeps one observable over the configured axes (the default 64 x 64 grid
 * when none are configured). threads <= 0 uses CQEDSIM_THREADS or the
 * hardware concurrency. */
CQED_API int cqed_sweep_run(const cqed_config* config, const char* observable, int threads,
                            cqed_grid** out);
CQED_API size_t cqed_grid_size(const cqed_grid* grid);
CQED_API size_t cqed_grid_axis_count(const cqed_grid* grid);
/* Writes the value of point i (row-major) and returns its status. */
CQED_API int cqed_grid_value(const cqed_grid* grid, size_t i, double* out_value);
CQED_API int cqed_grid_write_csv(const cqed_grid* grid, const char* path);
CQED_API int cqed_grid_write_svg(const cqed_grid* grid, const char* path);
CQED_API void cqed_grid_free(cqed_grid* grid);

/* Commands: spectrum, purcell, entangle, detunings, sweep, validate. The
 * return value reports whether the command could be started; the command's
 * own outcome is cqed_result_exit_code (0 ok, 1 failure, 2 config error,
 * 3 compute regime error). */
CQED_API int cqed_run_command(const cqed_config* config, const char* command, int threads,
                              cqed_result** out);
CQED_API int cqed_result_exit_code(const cqed_result* result);
CQED_API const char* cqed_result_error(const cqed_result* result);
CQED_API size_t cqed_result_warning_count(const cqed_result* result);
CQED_API const char* cqed_result_warning(const cqed_result* result, size_t i);
CQED_API size_t cqed_result_file_count(const cqed_result* result);
CQED_API const char* cqed_result_file(const cqed_result* result, size_t i);
CQED_API void cqed_result_free(cqed_result* result);

#ifdef __cplusplus
}
#endif

#endif /* CQED_CQED_H_ */
