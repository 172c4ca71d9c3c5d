/* Copyright 2026 periodcalc contributors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "periodcalc/brauer_descent.hpp"
#include "periodcalc/theorems.hpp"

namespace periodcalc {

using json = nlohmann::json;

// A parsed scenario file. Blocks are optional; commands ask for what they need.
struct Scenario {
  json source;
  FieldPtr K;
  ExtensionPtr L;
  std::optional<CMType> phi;
  CoefficientField E;
  std::optional<HodgeData> M;
  std::map<std::string, HeckeCharacter> characters;
  std::vector<std::string> character_order;
  GroupPtr group;
  std::string command;
  json params = json::object();
};

Scenario load_scenario(const json& j);
Scenario load_scenario_text(const std::string& text);

GroupPtr parse_group(const json& j, const std::string& pointer);

enum class Verdict { Ok, Pass, Fail };

struct RunResult {
  Verdict verdict = Verdict::Ok;
  json report;
  std::string text;
  std::string latex;

  int exit_code() const { return verdict == Verdict::Fail ? 1 : 0; }
};

const char* verdict_name(Verdict v);

// The command names accepted by run_command.
const std::vector<std::string>& command_names();

// params override the scenario's own "params" block key by key.
RunResult run_command(const Scenario& s, const std::string& command, const json& params = json::object());

json expression_json(const PeriodExpression& x);
json report_json(const VerifyReport& r);

}  // namespace periodcalc
