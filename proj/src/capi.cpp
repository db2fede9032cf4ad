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

#include "cqed/cqed.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "cqed/commands.hpp"
#include "cqed/errors.hpp"
#include "cqed/io.hpp"
#include "cqed/sweep.hpp"

struct cqed_config {
  cqed::RunConfig config;
};

struct cqed_grid {
  cqed::SweepGrid grid;
};

struct cqed_result {
  cqed::CommandResult result;
};

namespace {

thread_local std::string last_error;

int record(int status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename F>
int guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const cqed::Error& e) {
    return record(static_cast<int>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return record(CQED_ERR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return record(CQED_ERR_INTERNAL, e.what());
  } catch (...) {
    return record(CQED_ERR_INTERNAL, "unknown failure");
  }
}

int null_argument(const char* what) {
  return record(CQED_ERR_NULL_ARGUMENT, std::string("null argument: ") + what);
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* cqed_version(void) { return "1.0.0"; }

const char* cqed_status_name(int status) {
  if (status == CQED_ERR_NULL_ARGUMENT) return "null_argument";
  if (status == CQED_ERR_INTERNAL) return "internal";
  if (status < 0 || status > CQED_ERR_IO) return "unknown";
  return cqed::error_name(static_cast<cqed::ErrorCode>(status)).data();
}

const char* cqed_last_error(void) { return last_error.c_str(); }

void cqed_string_free(char* s) { std::free(s); }

int cqed_config_new_default(cqed_config** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new cqed_config{};
    return CQED_OK;
  });
}

int cqed_config_load(const char* path, cqed_config** out) {
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new cqed_config{cqed::load_config(path)};
    return CQED_OK;
  });
}

int cqed_config_parse(const char* json, cqed_config** out) {
  if (!json) return null_argument("json");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new cqed_config{cqed::parse_config(json)};
    return CQED_OK;
  });
}

int cqed_config_set(cqed_config* config, const char* assignment) {
  if (!config) return null_argument("config");
  if (!assignment) return null_argument("assignment");
  return guarded([&] {
    const auto text = cqed::apply_override(cqed::serialize_config(config->config), assignment);
    config->config = cqed::parse_config(text);
    return CQED_OK;
  });
}

int cqed_config_set_output_dir(cqed_config* config, const char* dir) {
  if (!config) return null_argument("config");
  if (!dir) return null_argument("dir");
  return guarded([&] {
    config->config.output_dir = dir;
    return CQED_OK;
  });
}

int cqed_config_set_seed(cqed_config* config, uint64_t seed) {
  if (!config) return null_argument("config");
  config->config.seed = seed;
  return CQED_OK;
}

int cqed_config_to_json(const cqed_config* config, char** out_json) {
  if (!config) return null_argument("config");
  if (!out_json) return null_argument("out_json");
  return guarded([&] {
    *out_json = duplicate(cqed::serialize_config(config->config));
    return CQED_OK;
  });
}

void cqed_config_free(cqed_config* config) { delete config; }

int cqed_evaluate(const cqed_config* config, const char* observable, double* out_value) {
  if (!config) return null_argument("config");
  if (!observable) return null_argument("observable");
  if (!out_value) return null_argument("out_value");
  return guarded([&] {
    const auto v = cqed::evaluate_point(config->config.params, config->config.model, {observable});
    *out_value = v[0].value;
    if (v[0].error != cqed::ErrorCode::kOk) return record(static_cast<int>(v[0].error), v[0].message);
    return static_cast<int>(CQED_OK);
  });
}

int cqed_sweep_run(const cqed_config* config, const char* observable, int threads, cqed_grid** out) {
  if (!config) return null_argument("config");
  if (!observable) return null_argument("observable");
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto& c = config->config;
    const auto axes = c.sweep.axes.empty() ? cqed::default_axes(c.params) : c.sweep.axes;
    auto grids = cqed::run_sweep(c.params, c.model, axes, {observable}, threads);
    *out = new cqed_grid{std::move(grids.front())};
    return CQED_OK;
  });
}

size_t cqed_grid_size(const cqed_grid* grid) { return grid ? grid->grid.size() : 0; }

size_t cqed_grid_axis_count(const cqed_grid* grid) { return grid ? grid->grid.axes.size() : 0; }

int cqed_grid_value(const cqed_grid* grid, size_t i, double* out_value) {
  if (!grid) return null_argument("grid");
  if (!out_value) return null_argument("out_value");
  if (i >= grid->grid.size()) return record(CQED_ERR_DOMAIN, "grid index out of range");
  *out_value = grid->grid.values[i];
  return static_cast<int>(grid->grid.error_mask[i]);
}

int cqed_grid_write_csv(const cqed_grid* grid, const char* path) {
  if (!grid) return null_argument("grid");
  if (!path) return null_argument("path");
  return guarded([&] {
    cqed::write_csv(grid->grid, path);
    return CQED_OK;
  });
}

int cqed_grid_write_svg(const cqed_grid* grid, const char* path) {
  if (!grid) return null_argument("grid");
  if (!path) return null_argument("path");
  return guarded([&] {
    cqed::write_svg_heatmap(grid->grid, path);
    return CQED_OK;
  });
}

void cqed_grid_free(cqed_grid* grid) { delete grid; }

int cqed_run_command(const cqed_config* config, const char* command, int threads, cqed_result** out) {
  if (!config) return null_argument("config");
  if (!command) return null_argument("command");
  if (!out) return null_argument("out");
  return guarded([&] {
    bool known = false;
    for (const auto& name : cqed::command_names()) known = known || name == command;
    if (!known) {
      return record(CQED_ERR_INVALID_CONFIG, std::string("unknown command '") + command + "'");
    }
    *out = new cqed_result{cqed::run_command(command, config->config, threads)};
    return static_cast<int>(CQED_OK);
  });
}

int cqed_result_exit_code(const cqed_result* result) {
  return result ? result->result.exit_code : cqed::kExitFailure;
}

const char* cqed_result_error(const cqed_result* result) {
  return result ? result->result.error.c_str() : "";
}

size_t cqed_result_warning_count(const cqed_result* result) {
  return result ? result->result.warnings.size() : 0;
}

const char* cqed_result_warning(const cqed_result* result, size_t i) {
  if (!result || i >= result->result.warnings.size()) return nullptr;
  return result->result.warnings[i].c_str();
}

size_t cqed_result_file_count(const cqed_result* result) {
  return result ? result->result.files.size() : 0;
}

const char* cqed_result_file(const cqed_result* result, size_t i) {
  if (!result || i >= result->result.files.size()) return nullptr;
  return result->result.files[i].c_str();
}

void cqed_result_free(cqed_result* result) { delete result; }

}  // extern "C"
