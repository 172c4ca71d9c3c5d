/* Copyright 2026 periodcalc contributors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#include "periodcalc/periodcalc.h"

#include <new>
#include <string>

#include "periodcalc/errors.hpp"
#include "periodcalc/scenario.hpp"

struct pc_scenario {
  periodcalc::Scenario scenario;
};

struct pc_result {
  std::string json;
  std::string text;
  std::string latex;
  std::string verdict;
};

namespace {

thread_local std::string g_error;
thread_local std::string g_code;
thread_local std::string g_pointer;

void clear_error() {
  g_error.clear();
  g_code.clear();
  g_pointer.clear();
}

int set_error(int rc, std::string code, std::string msg, std::string ptr = {}) {
  g_error = std::move(msg);
  g_code = std::move(code);
  g_pointer = std::move(ptr);
  return rc;
}

// Math precondition failures are reported as input errors: the input asked for something undefined.
template <typename F>
int guarded(F&& f) {
  clear_error();
  try {
    return f();
  } catch (const periodcalc::Error& e) {
    return set_error(PC_INPUT_ERROR, periodcalc::error_code_name(e.code()), e.what(), e.pointer());
  } catch (const std::bad_alloc&) {
    return set_error(PC_INTERNAL_ERROR, "OutOfMemory", "out of memory");
  } catch (const std::exception& e) {
    return set_error(PC_INTERNAL_ERROR, "Internal", e.what());
  } catch (...) {
    return set_error(PC_INTERNAL_ERROR, "Internal", "unknown exception");
  }
}

}  // namespace

extern "C" {

const char* pc_version(void) { return "1.0.0"; }

int pc_scenario_load(const char* json_text, pc_scenario** out) {
  if (out) *out = nullptr;
  return guarded([&]() -> int {
    if (!json_text || !out) return set_error(PC_INPUT_ERROR, "InvalidInput", "null argument");
    auto* h = new pc_scenario{periodcalc::load_scenario_text(json_text)};
    *out = h;
    return PC_OK;
  });
}

void pc_scenario_free(pc_scenario* scenario) { delete scenario; }

int pc_scenario_run(const pc_scenario* scenario, const char* command, const char* params_json, pc_result** out) {
  if (out) *out = nullptr;
  return guarded([&]() -> int {
    if (!scenario || !out) return set_error(PC_INPUT_ERROR, "InvalidInput", "null argument");
    periodcalc::json params = periodcalc::json::object();
    if (params_json && *params_json) {
      try {
        params = periodcalc::json::parse(params_json);
      } catch (const periodcalc::json::parse_error& e) {
        return set_error(PC_INPUT_ERROR, "InvalidInput", std::string("malformed params: ") + e.what(), "/params");
      }
    }
    const auto r = periodcalc::run_command(scenario->scenario, command ? command : "", params);
    auto* res = new pc_result{r.report.dump(2), r.text, r.latex, periodcalc::verdict_name(r.verdict)};
    *out = res;
    return r.exit_code() == 0 ? PC_OK : PC_FAIL;
  });
}

const char* pc_result_json(const pc_result* result) { return result ? result->json.c_str() : ""; }
const char* pc_result_text(const pc_result* result) { return result ? result->text.c_str() : ""; }
const char* pc_result_latex(const pc_result* result) { return result ? result->latex.c_str() : ""; }
const char* pc_result_verdict(const pc_result* result) { return result ? result->verdict.c_str() : ""; }
void pc_result_free(pc_result* result) { delete result; }

const char* pc_last_error(void) { return g_error.c_str(); }
const char* pc_last_error_code(void) { return g_code.c_str(); }
const char* pc_last_error_pointer(void) { return g_pointer.c_str(); }

}  // extern "C"
