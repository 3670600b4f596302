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
#include "maclane/maclane.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>

#include "maclane/defect.hpp"
#include "maclane/keypoly.hpp"
#include "maclane/limits.hpp"
#include "maclane/newton.hpp"
#include "maclane/scenarios.hpp"
#include "maclane/selftest.hpp"

struct ml_chain {
  maclane::Valuation mu;
};

struct ml_scenario {
  maclane::Scenario s;
};

namespace {

using namespace maclane;

thread_local std::string g_last_error;

template <class F>
ml_status guard(F&& f) {
  try {
    f();
    g_last_error.clear();
    return ML_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return static_cast<ml_status>(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = std::string("internal: ") + e.what();
  }
  return ML_ERR_INTERNAL;
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void need(const void* p, const char* what) {
  require(p != nullptr, ErrorCode::InvalidArgument, std::string("null ") + what);
}

std::string format_of(const char* f, std::initializer_list<const char*> allowed) {
  const std::string s = f == nullptr ? *allowed.begin() : f;
  for (const char* a : allowed)
    if (s == a) return s;
  fail(ErrorCode::InvalidArgument, "unsupported format \"" + s + "\"");
}

std::string defect_text(const Valuation& mu, const DefectReport& r) {
  std::ostringstream os;
  os << mu.describe() << "\n";
  os << "step  kind      deg      d  f  e(μ)  settles\n";
  for (const auto& s : r.steps) {
    const std::string deg = std::to_string(s.deg_before) + "->" + std::to_string(s.deg_after);
    std::string line = std::to_string(s.step);
    line.resize(6, ' ');
    line += s.limit ? "limit     " : "ordinary  ";
    line += deg + std::string(deg.size() < 9 ? 9 - deg.size() : 1, ' ');
    line += std::to_string(s.d) + "  " + std::to_string(s.f) + "  " + std::to_string(s.e_before) + "     ";
    line += s.stabilization_index ? std::to_string(*s.stabilization_index) : "-";
    os << line << "\n";
  }
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  os << "d=" << r.d_total << " e=" << r.e_total << " f=" << r.f_total << " efd=" << r.efd << "\n";
  return os.str();
}

}  // namespace

extern "C" {

const char* ml_version(void) { return "0.1.0"; }
const char* ml_last_error(void) { return g_last_error.c_str(); }
void ml_string_free(char* s) { std::free(s); }

ml_status ml_chain_open(const char* json, ml_chain** out) {
  return guard([&] {
    need(json, "json");
    need(out, "out");
    *out = new ml_chain{chain_file_from_json(parse_json_text(json, "chain"))};
  });
}

ml_status ml_chain_open_file(const char* path, ml_chain** out) {
  return guard([&] {
    need(path, "path");
    need(out, "out");
    *out = new ml_chain{chain_file_from_json(parse_json_text(read_text_file(path), path))};
  });
}

void ml_chain_free(ml_chain* c) { delete c; }

ml_status ml_chain_describe(const ml_chain* c, char** out) {
  return guard([&] {
    need(c, "chain");
    need(out, "out");
    *out = dup(c->mu.describe());
  });
}

ml_status ml_chain_to_json(const ml_chain* c, char** out) {
  return guard([&] {
    need(c, "chain");
    need(out, "out");
    *out = dup(chain_file_to_json(c->mu).dump(2));
  });
}

ml_status ml_chain_eval(const ml_chain* c, const char* poly, const char* format, char** out) {
  return guard([&] {
    need(c, "chain");
    need(poly, "poly");
    need(out, "out");
    const std::string fmt = format_of(format, {"text", "json"});
    const Poly f = parse_poly(c->mu.field(), poly);
    require(!f.is_zero(), ErrorCode::Domain, "the value of 0 is infinite by convention; pass a nonzero polynomial");
    const GroupElement v = c->mu.evaluate(f);
    if (fmt == "text") {
      *out = dup(v.to_string());
      return;
    }
    Json j;
    j["poly"] = f.to_string(c->mu.field());
    j["value"] = to_json(v);
    *out = dup(j.dump(2));
  });
}

ml_status ml_chain_polygon(const ml_chain* c, const char* phi, const char* poly, const char* format, char** out) {
  return guard([&] {
    need(c, "chain");
    need(poly, "poly");
    need(out, "out");
    const std::string fmt = format_of(format, {"json", "text", "svg"});
    const Valuation& mu = c->mu;
    require(!mu.has_support(), ErrorCode::Domain, "polygons need a chain whose last gamma is finite");
    const Poly key = phi == nullptr ? mu.key_polynomial() : parse_poly(mu.field(), phi);
    const Poly f = parse_poly(mu.field(), poly);
    const NewtonPolygon n = polygon(mu, key, f);
    const std::string title = "N(" + key.to_string(mu.field()) + ", " + f.to_string(mu.field()) + ")";
    if (fmt == "svg") {
      *out = dup(render_svg(n, 0, title));
    } else if (fmt == "text") {
      *out = dup(render_ascii(n, 0, title));
    } else {
      Json j = polygon_to_json(n);
      j["phi"] = key.to_string(mu.field());
      j["poly"] = f.to_string(mu.field());
      j["principal"] = polygon_to_json(principal(n, mu.evaluate(key)));
      *out = dup(j.dump(2));
    }
  });
}

ml_status ml_chain_kp_check(const ml_chain* c, const char* phi, uint64_t seed, char** out) {
  return guard([&] {
    need(c, "chain");
    need(phi, "phi");
    need(out, "out");
    const Valuation& mu = c->mu;
    require(!mu.has_support(), ErrorCode::Domain, "key polynomials need a chain whose last gamma is finite");
    const Poly f = parse_poly(mu.field(), phi);
    const KeyScreen s = key_screen(mu, f, seed);
    Json j;
    j["phi"] = f.to_string(mu.field());
    j["value"] = to_json(mu.evaluate(f));
    j["minimal"] = s.minimal;
    j["screen_passed"] = s.passed;
    j["samples"] = s.samples;
    j["informative"] = s.informative;
    if (s.witness) j["witness"] = Json::array({s.witness->first.to_string(mu.field()), s.witness->second.to_string(mu.field())});
    j["evidence"] = "randomized screen (seed " + std::to_string(seed) + ")";
    *out = dup(j.dump(2));
  });
}

ml_status ml_chain_probe(const ml_chain* c, uint32_t step, const char* poly, uint32_t window, char** out) {
  return guard([&] {
    need(c, "chain");
    need(poly, "poly");
    need(out, "out");
    require(step < c->mu.steps().size(), ErrorCode::InvalidArgument, "step out of range");
    const auto* l = std::get_if<LimitStep>(&c->mu.steps()[step]);
    require(l != nullptr, ErrorCode::InvalidArgument, "step " + std::to_string(step) + " is not a limit step");
    const auto r = probe_stability(*l->family, parse_poly(c->mu.field(), poly), window);
    const GroundField& k = c->mu.field();
    Json j;
    j["poly"] = r.poly.to_string(k);
    j["stable"] = r.stable;
    j["stable_index"] = r.stable_index ? Json(*r.stable_index) : Json(nullptr);
    j["stable_value"] = r.stable_value ? to_json(*r.stable_value) : Json(nullptr);
    j["evidence"] = r.evidence;
    Json vs = Json::array();
    for (const auto& v : r.values) vs.push_back(to_json(v));
    j["values"] = vs;
    *out = dup(j.dump(2));
  });
}

ml_status ml_chain_defect(const ml_chain* c, const char* format, char** out) {
  return guard([&] {
    need(c, "chain");
    need(out, "out");
    const std::string fmt = format_of(format, {"json", "text"});
    const DefectReport r = defect_formula(c->mu);
    *out = dup(fmt == "text" ? defect_text(c->mu, r) : defect_to_json(r).dump(2));
  });
}

ml_status ml_scenario_list(char** out_json) {
  return guard([&] {
    need(out_json, "out");
    Json a = Json::array();
    for (const auto& b : builtin_scenarios()) a.push_back(Json{{"name", b.name}, {"summary", b.summary}});
    *out_json = dup(a.dump(2));
  });
}

ml_status ml_scenario_build(const char* name, const char* params_json, ml_scenario** out) {
  return guard([&] {
    need(name, "name");
    need(out, "out");
    const Json params = params_json == nullptr ? Json::object() : parse_json_text(params_json, "parameters");
    *out = new ml_scenario{builtin_scenario(name, params)};
  });
}

ml_status ml_scenario_open_file(const char* path, ml_scenario** out) {
  return guard([&] {
    need(path, "path");
    need(out, "out");
    *out = new ml_scenario{load_scenario_file(path)};
  });
}

void ml_scenario_free(ml_scenario* s) { delete s; }

ml_status ml_scenario_run(const ml_scenario* s, const char* out_dir, char** out_report, int* all_ok) {
  return guard([&] {
    need(s, "scenario");
    const ScenarioRun run = run_scenario(s->s);
    if (out_dir != nullptr) write_run(run, out_dir);
    if (out_report != nullptr) *out_report = dup(run.report.dump(2));
    if (all_ok != nullptr) *all_ok = run.all_ok ? 1 : 0;
  });
}

ml_status ml_scenario_save(const ml_scenario* s, char** out_json) {
  return guard([&] {
    need(s, "scenario");
    need(out_json, "out");
    *out_json = dup(save_scenario(s->s));
  });
}

ml_status ml_scenario_chain(const ml_scenario* s, ml_chain** out) {
  return guard([&] {
    need(s, "scenario");
    need(out, "out");
    *out = new ml_chain{s->s.chain};
  });
}

ml_status ml_selftest(uint64_t seed, int quick, char** out_json, int* all_ok) {
  return guard([&] {
    const SelftestResult r = run_selftest(seed, quick != 0);
    if (out_json != nullptr) *out_json = dup(r.to_json().dump(2));
    if (all_ok != nullptr) *all_ok = r.all_ok() ? 1 : 0;
  });
}

uint64_t ml_default_seed(void) { return seed_from_env(); }

}  // extern "C"
