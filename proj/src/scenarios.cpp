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
#include "maclane/scenarios.hpp"

#include <algorithm>
#include <filesystem>
#include <set>

#include "maclane/defect.hpp"
#include "maclane/limits.hpp"
#include "maclane/newton.hpp"

namespace maclane {

namespace {

const std::vector<std::string> kFactKeys = {"d", "e", "f", "deg_G", "proper", "limit_steps", "hensel_ratio"};

std::uint32_t param(const Json& params, const std::string& key, std::uint64_t fallback) {
  if (!params.contains(key)) return static_cast<std::uint32_t>(fallback);
  return static_cast<std::uint32_t>(uint_member(params, key, "/params"));
}

std::string ps(std::uint64_t p) { return std::to_string(p); }

Json doc_artin_schreier_1(const Json& params) {
  const auto p = param(params, "p", 2);
  const auto h = param(params, "horizon", 5);
  const auto prec = param(params, "precision", h + 1);
  const std::string g = "x^" + ps(p) + "-x-1/t";
  Json d;
  d["schema"] = kScenarioSchema;
  d["name"] = "artin-schreier-1";
  d["field"] = Json{{"kind", "FpT"}, {"p", p}, {"prec", prec}};
  d["chain"] = Json::array(
      {Json{{"type", "depth0"}, {"a", "0"}, {"gamma", Json::array({"-1/" + ps(p)})}},
       Json{{"type", "limit"},
            {"family", Json{{"family", "artin_schreier_case1"}, {"p", p}, {"horizon", h}}},
            {"phi", g},
            {"gamma", "inf"},
            {"key", "certified"}}});
  d["target"] = g;
  d["facts"] = Json{{"d", p},         {"e", 1},           {"f", 1},
                    {"deg_G", p},     {"proper", true},   {"limit_steps", 1},
                    {"hensel_ratio", true}};
  Json values = Json::array();
  BigInt den = 1;
  for (std::uint32_t n = 0; n <= h; ++n, den *= p) values.push_back(Json::array({"-1/" + to_string(den)}));
  d["family_checks"] = Json::array(
      {Json{{"step", 1}, {"poly", g}, {"s_set", Json::array({0, p})}, {"deg", p}, {"values", values}}});
  d["evaluations"] = Json::array({Json{{"step", 1}, {"poly", g}, {"expect", "inf"}}});
  d["polygons"] = Json::array({Json{{"step", 1}, {"member", 0}, {"poly", g}},
                               Json{{"step", 1}, {"member", h}, {"poly", g}}});
  d["extensions"] = Json::array({Json{{"chain", d["chain"]}}});
  return d;
}

Json case2_chain(std::uint32_t p, std::uint32_t h, std::uint32_t root, const std::string& g) {
  return Json::array(
      {Json{{"type", "depth0"}, {"a", ps(root)}, {"gamma", Json::array({"1"})}},
       Json{{"type", "limit"},
            {"family", Json{{"family", "artin_schreier_case2"}, {"p", p}, {"horizon", h}, {"root", root}}},
            {"phi", g},
            {"gamma", "inf"},
            {"key", "certified"}}});
}

Json doc_artin_schreier_2(const Json& params) {
  const auto p = param(params, "p", 5);
  const auto h = param(params, "horizon", 6);
  const std::string g = "x^" + ps(p) + "-x+t";
  Json d;
  d["schema"] = kScenarioSchema;
  d["name"] = "artin-schreier-2";
  d["field"] = Json{{"kind", "FpT"}, {"p", p}, {"prec", 0}};
  d["chain"] = case2_chain(p, h, 0, g);
  d["target"] = g;
  d["facts"] = Json{{"d", 1},         {"e", 1},           {"f", 1},
                    {"deg_G", 1},     {"proper", true},   {"limit_steps", 1},
                    {"hensel_ratio", false}};
  Json values = Json::array();
  BigInt pw = p;
  for (std::uint32_t n = 0; n <= h; ++n, pw *= p) values.push_back(Json::array({to_string(pw)}));
  d["family_checks"] = Json::array(
      {Json{{"step", 1}, {"poly", g}, {"s_set", Json::array({0, 1})}, {"deg", 1}, {"values", values}}});
  d["evaluations"] = Json::array({Json{{"step", 1}, {"poly", g}, {"expect", "inf"}}});
  d["polygons"] = Json::array({Json{{"step", 1}, {"member", 0}, {"poly", g}}});
  Json ext = Json::array();
  for (std::uint32_t j = 0; j < p; ++j) ext.push_back(Json{{"chain", case2_chain(p, h, j, g)}});
  d["extensions"] = ext;
  return d;
}

Json doc_rank_two_qt(const Json& params) {
  const auto p = param(params, "p", 5);
  const auto h = param(params, "horizon", 8);
  const std::string phi = "x^2+4", g = "x^4+(2t+4)x^2+t^2";
  const auto digits = gaussian_digit_data(p, h);
  Json d;
  d["schema"] = kScenarioSchema;
  d["name"] = "rank-two-qt";
  d["field"] = Json{{"kind", "QtRank2"}, {"p", p}};
  d["chain"] = Json::array(
      {Json{{"type", "depth0"}, {"a", "0"}, {"gamma", Json::array({"0", "0"})}},
       Json{{"type", "limit"},
            {"family", Json{{"family", "gaussian_digits"}, {"p", p}, {"horizon", h}}},
            {"phi", phi},
            {"gamma", Json::array({"1", "0"})},
            {"key", "certified"}},
       Json{{"type", "limit"},
            {"family", Json{{"family", "sqrt_one_plus_t"}, {"p", p}, {"horizon", h}, {"phi", phi}}},
            {"phi", g},
            {"gamma", "inf"},
            {"key", "certified"}}});
  d["target"] = g;
  d["facts"] = Json{{"d", 1},         {"e", 1},           {"f", 1},
                    {"deg_G", 1},     {"proper", true},   {"limit_steps", 2},
                    {"hensel_ratio", false}};
  Json values = Json::array();
  for (std::uint32_t n = 0; n <= h; ++n) values.push_back(Json::array({"0", std::to_string(digits.positions[n])}));
  d["family_checks"] = Json::array({Json{{"step", 1}, {"poly", phi}, {"values", values}}});
  d["evaluations"] = Json::array({Json{{"step", 1}, {"poly", phi}, {"expect", Json::array({"1", "0"})}},
                                  Json{{"step", 2}, {"poly", g}, {"expect", "inf"}}});
  d["polygons"] = Json::array({Json{{"step", 0}, {"poly", g}},
                               Json{{"step", 1}, {"poly", g}},
                               Json{{"step", 1}, {"member", 2}, {"poly", phi}}});
  return d;
}

struct Selector {
  std::size_t step = 0;
  std::optional<std::size_t> member;
};

Selector read_selector(const Valuation& chain, const Json& j, const std::string& at) {
  Selector s;
  s.step = uint_member(j, "step", at);
  if (s.step >= chain.steps().size())
    fail_at(at + "/step", ErrorCode::InvalidArgument, "step out of range 0.." + std::to_string(chain.steps().size() - 1));
  if (j.contains("member")) {
    s.member = uint_member(j, "member", at);
    const auto* l = std::get_if<LimitStep>(&chain.steps()[s.step]);
    if (l == nullptr) fail_at(at + "/member", ErrorCode::InvalidArgument, "member given for a step that is not a limit");
    if (*s.member > l->family->horizon()) fail_at(at + "/member", ErrorCode::InvalidArgument, "member beyond the horizon");
  }
  return s;
}

Valuation select(const Valuation& chain, const Selector& s) {
  if (s.member) return std::get<LimitStep>(chain.steps()[s.step]).family->member(*s.member);
  return chain.prefix(s.step + 1);
}

std::string selector_name(const Selector& s) {
  return s.member ? "ρ_" + std::to_string(*s.member) + " of step " + std::to_string(s.step)
                  : "μ_" + std::to_string(s.step);
}

const ContinuousFamily& family_at(const Valuation& chain, std::size_t step, const std::string& at) {
  const auto* l = step < chain.steps().size() ? std::get_if<LimitStep>(&chain.steps()[step]) : nullptr;
  if (l == nullptr) fail_at(at + "/step", ErrorCode::InvalidArgument, "not a limit step");
  return *l->family;
}

Json array_of(const std::set<std::size_t>& s) {
  Json a = Json::array();
  for (auto i : s) a.push_back(i);
  return a;
}

Json stability_to_json(const StabilityReport& r, const GroundField& k) {
  Json j;
  j["poly"] = r.poly.to_string(k);
  j["stable"] = r.stable;
  j["stable_index"] = r.stable_index ? Json(*r.stable_index) : Json(nullptr);
  j["stable_value"] = r.stable_value ? to_json(*r.stable_value) : Json(nullptr);
  j["evidence"] = r.evidence;
  Json vs = Json::array();
  for (const auto& v : r.values) vs.push_back(to_json(v));
  j["values"] = vs;
  return j;
}

}  // namespace

Json defect_to_json(const DefectReport& r) {
  Json j;
  Json steps = Json::array();
  for (const auto& s : r.steps) {
    Json x;
    x["step"] = s.step;
    x["kind"] = s.limit ? "limit" : "ordinary";
    x["deg_before"] = s.deg_before;
    x["deg_after"] = s.deg_after;
    x["tangent_degree"] = s.tangent_degree;
    x["d"] = s.d;
    x["f"] = s.f;
    x["e_before"] = s.e_before;
    x["stabilization_index"] = s.stabilization_index ? Json(*s.stabilization_index) : Json(nullptr);
    Json seq = Json::array();
    for (const auto& [n, deg] : s.degree_sequence) seq.push_back(Json::array({n, deg}));
    x["degree_sequence"] = seq;
    steps.push_back(x);
  }
  j["steps"] = steps;
  j["d_total"] = r.d_total;
  j["e_total"] = r.e_total;
  j["f_total"] = r.f_total;
  j["efd"] = r.efd;
  j["e_product"] = r.e_product;
  j["hensel_product"] = r.hensel_product;
  j["groups_proper"] = r.groups_proper;
  j["notes"] = r.notes;
  return j;
}

Scenario load_scenario(const Json& doc) {
  if (!doc.is_object()) fail_at("", ErrorCode::Parse, "scenario must be a JSON object");
  const auto schema = uint_member(doc, "schema", "");
  if (schema != kScenarioSchema)
    fail_at("/schema", ErrorCode::InvalidArgument, "unsupported schema version " + std::to_string(schema));
  const std::string name = string_member(doc, "name", "");
  const FieldPtr k = field_from_json(member(doc, "field", ""), "/field");
  Valuation chain = chain_from_json(k, member(doc, "chain", ""), "/chain");
  Scenario s{name, doc, chain, {}};
  s.doc["chain"] = chain_to_json(chain);

  if (doc.contains("target")) {
    const std::string g = string_member(doc, "target", "");
    at_pointer("/target", [&] { return parse_poly(*k, g); });
  }
  if (doc.contains("facts")) {
    const Json& f = doc["facts"];
    if (!f.is_object()) fail_at("/facts", ErrorCode::Parse, "expected an object");
    for (auto it = f.begin(); it != f.end(); ++it) {
      const std::string at = "/facts/" + it.key();
      if (std::find(kFactKeys.begin(), kFactKeys.end(), it.key()) == kFactKeys.end())
        fail_at(at, ErrorCode::InvalidArgument, "unknown fact");
      const bool boolean = it.key() == "proper" || it.key() == "hensel_ratio";
      if (boolean ? !it.value().is_boolean() : !is_uint(it.value()))
        fail_at(at, ErrorCode::Parse, boolean ? "expected a boolean" : "expected a positive integer");
    }
  }
  for (const char* list : {"polygons", "evaluations", "family_checks"}) {
    if (!doc.contains(list)) continue;
    const Json& arr = doc[list];
    const std::string base = std::string("/") + list;
    if (!arr.is_array()) fail_at(base, ErrorCode::Parse, "expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string at = base + "/" + std::to_string(i);
      const Selector sel = read_selector(chain, arr[i], at);
      const std::string text = string_member(arr[i], "poly", at);
      at_pointer(at + "/poly", [&] { return parse_poly(*k, text); });
      if (std::string(list) == "evaluations") group_from_json(member(arr[i], "expect", at), k->rank(), at + "/expect");
      if (std::string(list) == "family_checks") {
        family_at(chain, sel.step, at);
        if (arr[i].contains("values")) {
          const Json& v = arr[i]["values"];
          if (!v.is_array()) fail_at(at + "/values", ErrorCode::Parse, "expected an array");
          for (std::size_t n = 0; n < v.size(); ++n)
            group_from_json(v[n], k->rank(), at + "/values/" + std::to_string(n));
        }
      }
    }
  }
  if (doc.contains("extensions")) {
    const Json& ext = doc["extensions"];
    if (!ext.is_array()) fail_at("/extensions", ErrorCode::Parse, "expected an array");
    for (std::size_t i = 0; i < ext.size(); ++i) {
      const std::string at = "/extensions/" + std::to_string(i);
      s.extensions.push_back(chain_from_json(k, member(ext[i], "chain", at), at + "/chain"));
      s.doc["extensions"][i]["chain"] = chain_to_json(s.extensions.back());
    }
  } else {
    s.extensions.push_back(chain);
  }
  return s;
}

Scenario load_scenario_file(const std::string& path) {
  return load_scenario(parse_json_text(read_text_file(path), path));
}

std::string save_scenario(const Scenario& s) { return s.doc.dump(2) + "\n"; }

std::vector<BuiltinInfo> builtin_scenarios() {
  return {{"artin-schreier-1", "Artin-Schreier, unique extension with defect p (p=2, horizon=5)"},
          {"artin-schreier-2", "Artin-Schreier, p defectless extensions (p=5, horizon=6)"},
          {"rank-two-qt", "two consecutive limit augmentations over the rank-two valuation (p=5, horizon=8)"}};
}

Json builtin_document(const std::string& name, const Json& params) {
  if (!params.is_object()) fail_at("/params", ErrorCode::Parse, "parameters must be an object");
  for (auto it = params.begin(); it != params.end(); ++it)
    if (it.key() != "p" && it.key() != "horizon" && it.key() != "precision")
      fail_at("/params/" + it.key(), ErrorCode::InvalidArgument, "unknown parameter");
  if (name == "artin-schreier-1") return doc_artin_schreier_1(params);
  if (params.contains("precision"))
    fail_at("/params/precision", ErrorCode::InvalidArgument, "precision applies to artin-schreier-1 only");
  if (name == "artin-schreier-2") return doc_artin_schreier_2(params);
  if (name == "rank-two-qt") return doc_rank_two_qt(params);
  fail(ErrorCode::InvalidArgument, "unknown scenario \"" + name + "\"");
}

Scenario builtin_scenario(const std::string& name, const Json& params) {
  return load_scenario(builtin_document(name, params));
}

ScenarioRun run_scenario(const Scenario& s) {
  const Valuation& chain = s.chain;
  const GroundField& k = chain.field();
  const Json& doc = s.doc;
  ScenarioRun run;
  bool ok = true;
  Json& rep = run.report;
  rep["schema"] = kScenarioSchema;
  rep["scenario"] = s.name;
  rep["field"] = field_to_json(k);
  rep["chain"] = chain.describe();
  Json assumptions = Json::array();

  Json steps = Json::array();
  for (std::size_t i = 0; i < chain.steps().size(); ++i) {
    const Step& st = chain.steps()[i];
    Json j;
    j["index"] = i;
    j["type"] = std::holds_alternative<DepthZeroStep>(st) ? "depth0" : is_limit(st) ? "limit" : "ordinary";
    j["phi"] = step_phi(st, chain.characteristic()).to_string(k);
    j["gamma"] = to_json(step_gamma(st));
    const bool cert = std::visit(
        [](const auto& x) {
          if constexpr (std::is_same_v<std::decay_t<decltype(x)>, DepthZeroStep>)
            return false;
          else
            return x.certified;
        },
        st);
    j["key"] = cert ? "certified" : "screened";
    if (cert) assumptions.push_back("key polynomial of step " + std::to_string(i) + " is declared certified");
    steps.push_back(j);
  }
  rep["steps"] = steps;

  // Stability probes for every limit step: phi and the monomials below it.
  Json probes = Json::array();
  for (std::size_t i = 0; i < chain.steps().size(); ++i) {
    const auto* l = std::get_if<LimitStep>(&chain.steps()[i]);
    if (l == nullptr) continue;
    const std::string at = "/chain/" + std::to_string(i);
    std::vector<Poly> polys{l->phi};
    for (std::int64_t e = 0; e < l->phi.degree(); ++e)
      polys.push_back(Poly::x(chain.characteristic()).pow(static_cast<std::uint64_t>(e)));
    for (const auto& f : polys) {
      Json j = stability_to_json(at_pointer(at, [&] { return probe_stability(*l->family, f, 2); }), k);
      j["step"] = i;
      const bool expect_stable = !(f == l->phi);
      j["ok"] = j["stable"].get<bool>() == expect_stable;
      ok = ok && j["ok"].get<bool>();
      probes.push_back(j);
    }
    if (l->family->certificates().empty())
      assumptions.push_back("stability along the family of step " + std::to_string(i) + " is window evidence only");
  }
  rep["probes"] = probes;

  Json checks = Json::array();
  if (doc.contains("family_checks")) {
    const Json& arr = doc["family_checks"];
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string at = "/family_checks/" + std::to_string(i);
      const Json& c = arr[i];
      const auto& fam = family_at(chain, uint_member(c, "step", at), at);
      const Poly f = parse_poly(k, c["poly"].get<std::string>());
      Json out;
      out["step"] = c["step"];
      out["poly"] = f.to_string(k);
      Json members = Json::array();
      bool good = true;
      for (std::size_t n = 0; n <= fam.horizon(); ++n) {
        const Valuation& rho = fam.member(n);
        Json m;
        m["n"] = n;
        m["key"] = rho.key_polynomial().to_string(k);
        const GroupElement value = at_pointer(at, [&] { return rho.evaluate(f); });
        m["value"] = to_json(value);
        if (c.contains("values") && n < c["values"].size())
          good = good && value == group_from_json(c["values"][n], k.rank(), at + "/values/" + std::to_string(n));
        const auto sset = rho.s_set(f);
        m["s_set"] = array_of(sset);
        m["deg"] = rho.deg_mu(f);
        if (c.contains("s_set")) good = good && m["s_set"] == c["s_set"];
        if (c.contains("deg")) good = good && m["deg"] == c["deg"];
        members.push_back(m);
      }
      if (c.contains("values") && c["values"].size() != fam.horizon() + 1) good = false;
      out["members"] = members;
      out["ok"] = good;
      ok = ok && good;
      checks.push_back(out);
    }
  }
  rep["family_checks"] = checks;

  Json evals = Json::array();
  if (doc.contains("evaluations")) {
    const Json& arr = doc["evaluations"];
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string at = "/evaluations/" + std::to_string(i);
      const Selector sel = read_selector(chain, arr[i], at);
      const Poly f = parse_poly(k, arr[i]["poly"].get<std::string>());
      const GroupElement v = at_pointer(at, [&] { return select(chain, sel).evaluate(f); });
      const GroupElement want = group_from_json(arr[i]["expect"], k.rank(), at + "/expect");
      Json e;
      e["valuation"] = selector_name(sel);
      e["poly"] = f.to_string(k);
      e["value"] = to_json(v);
      e["expect"] = to_json(want);
      e["ok"] = v == want;
      ok = ok && v == want;
      evals.push_back(e);
    }
  }
  rep["evaluations"] = evals;

  Json polys = Json::array();
  if (doc.contains("polygons")) {
    const Json& arr = doc["polygons"];
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string at = "/polygons/" + std::to_string(i);
      const Selector sel = read_selector(chain, arr[i], at);
      const Valuation mu = select(chain, sel);
      const Poly f = parse_poly(k, arr[i]["poly"].get<std::string>());
      if (mu.has_support()) fail_at(at, ErrorCode::Domain, "polygon of a valuation with infinite gamma");
      const Poly phi = mu.key_polynomial();
      const NewtonPolygon n = at_pointer(at, [&] { return polygon(mu, phi, f); });
      const NewtonPolygon plus = principal(n, mu.evaluate(phi));
      const std::string file = "polygon-" + std::to_string(i) + ".svg";
      const std::string title = "N(" + selector_name(sel) + ", " + phi.to_string(k) + ")";
      run.svgs[file] = render_svg(n, 0, title);
      Json p;
      p["file"] = file;
      p["valuation"] = selector_name(sel);
      p["phi"] = phi.to_string(k);
      p["poly"] = f.to_string(k);
      p["polygon"] = polygon_to_json(n);
      p["principal"] = polygon_to_json(plus);
      p["s_set"] = array_of(mu.s_set(f, phi));
      polys.push_back(p);
    }
  }
  rep["polygons"] = polys;

  const DefectReport dr = defect_formula(chain, !chain.has_support());
  rep["defect"] = defect_to_json(dr);

  Json facts = Json::array();
  std::size_t limits = 0;
  for (const auto& st : chain.steps()) limits += is_limit(st) ? 1 : 0;
  auto fact = [&](const std::string& key, const Json& computed) {
    Json f;
    f["fact"] = key;
    f["declared"] = doc["facts"][key];
    f["computed"] = computed;
    f["ok"] = computed == doc["facts"][key];
    ok = ok && f["ok"].get<bool>();
    facts.push_back(f);
  };
  if (doc.contains("facts")) {
    const Json& fd = doc["facts"];
    if (fd.contains("d")) fact("d", dr.d_total);
    if (fd.contains("e")) fact("e", dr.e_total);
    if (fd.contains("f")) fact("f", dr.f_total);
    if (fd.contains("deg_G")) fact("deg_G", dr.efd);
    if (fd.contains("limit_steps")) fact("limit_steps", limits);
    if (fd.contains("hensel_ratio")) fact("hensel_ratio", dr.hensel_product == dr.d_total);
    if (fd.contains("proper")) {
      if (fd["proper"].get<bool>()) {
        fact("proper", dr.groups_proper);
        assumptions.push_back("properness is declared; only its value-group consequences are checked");
      } else {
        assumptions.push_back("chain declared not proper; the defect formula may not apply");
      }
    }
  }
  rep["facts"] = facts;

  if (doc.contains("target") && !doc.contains("extensions")) {
    Json es;
    es["checked"] = false;
    es["reason"] = "the scenario does not list every extension of v to the target";
    rep["efd_sum"] = es;
  } else if (doc.contains("target")) {
    const Poly g = parse_poly(k, doc["target"].get<std::string>());
    std::vector<DefectReport> parts;
    Json ext = Json::array();
    for (std::size_t i = 0; i < s.extensions.size(); ++i) {
      const std::string at = "/extensions/" + std::to_string(i);
      const Valuation& w = s.extensions[i];
      const GroupElement wg = w.evaluate(g);
      parts.push_back(at_pointer(at, [&] { return defect_formula(w); }));
      Json x;
      x["chain"] = w.describe();
      x["value_of_target"] = to_json(wg);
      x["e"] = parts.back().e_total;
      x["f"] = parts.back().f_total;
      x["d"] = parts.back().d_total;
      ext.push_back(x);
      ok = ok && wg.is_infinite();
    }
    const EfdSum sum = efd_sum_check(parts, static_cast<std::uint64_t>(g.degree()));
    Json es;
    es["checked"] = true;
    es["extensions"] = ext;
    es["sum"] = sum.sum;
    es["degree"] = sum.degree;
    es["holds"] = sum.holds;
    if (!sum.holds) es["diff"] = sum.diff;
    ok = ok && sum.holds;
    rep["efd_sum"] = es;
  }
  rep["assumptions"] = assumptions;
  rep["ok"] = ok;
  run.all_ok = ok;

  std::string text = chain.describe() + "\n";
  for (std::size_t i = 1; i < s.extensions.size(); ++i) text += s.extensions[i].describe() + "\n";
  text += "d = " + std::to_string(dr.d_total) + ", e = " + std::to_string(dr.e_total) + ", f = " +
          std::to_string(dr.f_total) + "\n";
  run.chain_text = text;
  return run;
}

void write_run(const ScenarioRun& run, const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  require(!ec, ErrorCode::Io, "cannot create " + dir + ": " + ec.message());
  const std::filesystem::path d(dir);
  write_text_file((d / "report.json").string(), run.report.dump(2) + "\n");
  write_text_file((d / "chain.txt").string(), run.chain_text);
  for (const auto& [name, svg] : run.svgs) write_text_file((d / name).string(), svg);
}

}  // namespace maclane
