/* Copyright (C) 2026 The maclane authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#ifndef MACLANE_SCENARIOS_HPP
#define MACLANE_SCENARIOS_HPP

#include <map>
#include <string>
#include <vector>

#include "maclane/serialize.hpp"
#include "maclane/valuation.hpp"

namespace maclane {

inline constexpr unsigned kScenarioSchema = 1;

/// A validated scenario document. The document is kept as loaded except that
/// the chain is re-emitted canonically, so save(load(save(s))) == save(s).
struct Scenario {
  std::string name;
  Json doc;
  Valuation chain;
  std::vector<Valuation> extensions;  // chains over the same target; defaults to {chain}
};

Scenario load_scenario(const Json& doc);
Scenario load_scenario_file(const std::string& path);
std::string save_scenario(const Scenario& s);

struct BuiltinInfo {
  std::string name;
  std::string summary;
};
std::vector<BuiltinInfo> builtin_scenarios();
/// Parameters: "p", "horizon", "precision" (artin-schreier-1 only). Missing ones take
/// the builtin defaults.
Json builtin_document(const std::string& name, const Json& params = Json::object());
Scenario builtin_scenario(const std::string& name, const Json& params = Json::object());

struct ScenarioRun {
  Json report;
  std::string chain_text;
  std::map<std::string, std::string> svgs;  // file name -> content
  bool all_ok = false;
};
ScenarioRun run_scenario(const Scenario& s);
/// Writes report.json, chain.txt and polygon-*.svg into `dir` (created if missing).
void write_run(const ScenarioRun& run, const std::string& dir);

/// JSON for a defect report (shared with the C API).
struct DefectReport;
Json defect_to_json(const DefectReport& r);

}  // namespace maclane

#endif
