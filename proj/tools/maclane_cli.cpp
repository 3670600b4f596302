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
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "maclane/maclane.h"

namespace {

struct Failure {
  int code;
};

void check(ml_status s) {
  if (s == ML_OK) return;
  std::cerr << "error: " << ml_last_error() << "\n";
  throw Failure{1};
}

std::string take(char* s) {
  std::string out = s == nullptr ? "" : s;
  ml_string_free(s);
  return out;
}

void emit(const std::string& text, const std::string& path) {
  const bool newline = !text.empty() && text.back() != '\n';
  if (path.empty()) {
    std::cout << text << (newline ? "\n" : "");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text << (newline ? "\n" : "");
  if (!out.good()) {
    std::cerr << "error: cannot write " << path << "\n";
    throw Failure{1};
  }
}

class Chain {
 public:
  explicit Chain(ml_chain* c) : c_(c) {}
  ~Chain() { ml_chain_free(c_); }
  Chain(const Chain&) = delete;
  Chain& operator=(const Chain&) = delete;
  ml_chain* get() const { return c_; }

 private:
  ml_chain* c_;
};

class Scenario {
 public:
  explicit Scenario(ml_scenario* s) : s_(s) {}
  ~Scenario() { ml_scenario_free(s_); }
  Scenario(const Scenario&) = delete;
  Scenario& operator=(const Scenario&) = delete;
  ml_scenario* get() const { return s_; }

 private:
  ml_scenario* s_;
};

struct Options {
  std::string chain, scenario, poly, phi, format, out;
  std::optional<unsigned> p, horizon, precision;
  bool quick = false;
};

bool is_builtin(const std::string& name) {
  char* list = nullptr;
  check(ml_scenario_list(&list));
  const std::string text = take(list);
  return text.find("\"name\": \"" + name + "\"") != std::string::npos;
}

ml_scenario* open_scenario(const Options& o) {
  ml_scenario* s = nullptr;
  if (is_builtin(o.scenario)) {
    std::string params = "{";
    auto add = [&](const char* key, const std::optional<unsigned>& v) {
      if (!v) return;
      if (params.size() > 1) params += ",";
      params += "\"" + std::string(key) + "\":" + std::to_string(*v);
    };
    add("p", o.p);
    add("horizon", o.horizon);
    add("precision", o.precision);
    params += "}";
    check(ml_scenario_build(o.scenario.c_str(), params.c_str(), &s));
  } else {
    if (o.p || o.horizon || o.precision) {
      std::cerr << "error: --p, --horizon and --precision apply to builtin scenarios only\n";
      throw Failure{2};
    }
    check(ml_scenario_open_file(o.scenario.c_str(), &s));
  }
  return s;
}

ml_chain* open_chain(const Options& o) {
  ml_chain* c = nullptr;
  if (!o.chain.empty()) {
    check(ml_chain_open_file(o.chain.c_str(), &c));
    return c;
  }
  if (o.scenario.empty()) {
    std::cerr << "error: --chain or --scenario is required\n";
    throw Failure{2};
  }
  Scenario s(open_scenario(o));
  check(ml_scenario_chain(s.get(), &c));
  return c;
}

const char* fmt(const Options& o, const char* fallback) { return o.format.empty() ? fallback : o.format.c_str(); }

int cmd_eval(const Options& o) {
  Chain c(open_chain(o));
  char* out = nullptr;
  check(ml_chain_eval(c.get(), o.poly.c_str(), fmt(o, "text"), &out));
  emit(take(out), o.out);
  return 0;
}

int cmd_polygon(const Options& o) {
  Chain c(open_chain(o));
  char* out = nullptr;
  check(ml_chain_polygon(c.get(), o.phi.empty() ? nullptr : o.phi.c_str(), o.poly.c_str(), fmt(o, "json"), &out));
  emit(take(out), o.out);
  return 0;
}

int cmd_kp(const Options& o) {
  Chain c(open_chain(o));
  char* out = nullptr;
  check(ml_chain_kp_check(c.get(), o.phi.c_str(), ml_default_seed(), &out));
  emit(take(out), o.out);
  return 0;
}

int cmd_defect(const Options& o) {
  Chain c(open_chain(o));
  char* out = nullptr;
  check(ml_chain_defect(c.get(), fmt(o, "text"), &out));
  emit(take(out), o.out);
  return 0;
}

int cmd_scenario_list() {
  char* out = nullptr;
  check(ml_scenario_list(&out));
  emit(take(out), "");
  return 0;
}

int cmd_scenario_run(const Options& o) {
  Scenario s(open_scenario(o));
  char* report = nullptr;
  int ok = 0;
  check(ml_scenario_run(s.get(), o.out.empty() ? nullptr : o.out.c_str(), &report, &ok));
  const std::string text = take(report);
  if (o.format == "json") {
    emit(text, "");
  } else {
    ml_chain* raw = nullptr;
    check(ml_scenario_chain(s.get(), &raw));
    Chain c(raw);
    char* table = nullptr;
    check(ml_chain_defect(c.get(), "text", &table));
    std::cout << take(table);
    std::cout << (ok ? "all declared facts hold" : "some declared facts FAILED; see report.json") << "\n";
    if (!o.out.empty()) std::cout << "wrote " << o.out << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_scenario_save(const Options& o) {
  Scenario s(open_scenario(o));
  char* out = nullptr;
  check(ml_scenario_save(s.get(), &out));
  emit(take(out), o.out);
  return 0;
}

int cmd_selftest(const Options& o) {
  char* out = nullptr;
  int ok = 0;
  const std::uint64_t seed = ml_default_seed();
  check(ml_selftest(seed, o.quick ? 1 : 0, &out, &ok));
  emit(take(out), o.out);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maclane: augmentation chains of valuations on K[x]"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ml_version()));
  Options o;
  const std::vector<std::string> formats{"json", "text", "svg"};

  auto* eval = app.add_subcommand("eval", "value of a polynomial under a chain");
  eval->add_option("--chain", o.chain, "chain JSON file");
  eval->add_option("--scenario", o.scenario, "builtin scenario name or scenario file");
  eval->add_option("--poly", o.poly, "polynomial")->required();
  eval->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));
  eval->add_option("--out", o.out, "output file");

  auto* poly = app.add_subcommand("polygon", "Newton polygon of a polynomial");
  poly->add_option("--chain", o.chain, "chain JSON file");
  poly->add_option("--scenario", o.scenario, "builtin scenario name or scenario file");
  poly->add_option("--phi", o.phi, "key polynomial (default: the chain's last one)");
  poly->add_option("--poly", o.poly, "polynomial")->required();
  poly->add_option("--format", o.format)->check(CLI::IsMember(formats));
  poly->add_option("--out", o.out, "output file");

  auto* kp = app.add_subcommand("kp", "minimality and key polynomial screen");
  kp->add_option("--chain", o.chain, "chain JSON file");
  kp->add_option("--scenario", o.scenario, "builtin scenario name or scenario file");
  kp->add_option("--phi", o.phi, "candidate key polynomial")->required();
  kp->add_option("--out", o.out, "output file");

  auto* defect = app.add_subcommand("defect", "defect formula of a chain");
  for (auto* sub : {eval, poly, kp, defect}) {
    sub->add_option("--p", o.p, "prime for builtin scenarios");
    sub->add_option("--horizon", o.horizon, "family horizon for builtin scenarios");
    sub->add_option("--precision", o.precision, "field precision for builtin scenarios");
  }
  defect->add_option("--chain", o.chain, "chain JSON file");
  defect->add_option("--scenario", o.scenario, "builtin scenario name or scenario file");
  defect->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));
  defect->add_option("--out", o.out, "output file");

  auto* scen = app.add_subcommand("scenario", "builtin and user scenarios");
  scen->require_subcommand(1);
  scen->add_subcommand("list", "list builtin scenarios");
  auto* run = scen->add_subcommand("run", "run a scenario and write its report bundle");
  auto* save = scen->add_subcommand("save", "print a scenario document");
  for (auto* sub : {run, save}) {
    sub->add_option("name", o.scenario, "builtin name or scenario file")->required();
    sub->add_option("--p", o.p, "prime");
    sub->add_option("--horizon", o.horizon, "family horizon");
    sub->add_option("--precision", o.precision, "field precision (artin-schreier-1)");
  }
  run->add_option("--out", o.out, "output directory");
  run->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));
  save->add_option("--out", o.out, "output file");

  auto* self = app.add_subcommand("selftest", "run the invariant suite (seed from MACLANE_SEED)");
  self->add_flag("--quick", o.quick, "smaller samples");
  self->add_option("--out", o.out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (eval->parsed()) return cmd_eval(o);
    if (poly->parsed()) return cmd_polygon(o);
    if (kp->parsed()) return cmd_kp(o);
    if (defect->parsed()) return cmd_defect(o);
    if (scen->parsed()) {
      if (run->parsed()) return cmd_scenario_run(o);
      if (save->parsed()) return cmd_scenario_save(o);
      return cmd_scenario_list();
    }
    if (self->parsed()) return cmd_selftest(o);
  } catch (const Failure& f) {
    return f.code;
  }
  return 2;
}
