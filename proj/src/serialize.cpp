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
#include "maclane/serialize.hpp"

#include <fstream>
#include <sstream>

#include "maclane/keypoly.hpp"
#include "maclane/limits.hpp"

namespace maclane {

void fail_at(const std::string& pointer, ErrorCode code, const std::string& what) {
  fail(code, (pointer.empty() ? std::string("/") : pointer) + ": " + what);
}

const Json& member(const Json& obj, const std::string& key, const std::string& pointer) {
  if (!obj.is_object()) fail_at(pointer, ErrorCode::Parse, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail_at(pointer + "/" + key, ErrorCode::Parse, "missing required field");
  return *it;
}

std::string string_member(const Json& obj, const std::string& key, const std::string& pointer) {
  const Json& v = member(obj, key, pointer);
  if (!v.is_string()) fail_at(pointer + "/" + key, ErrorCode::Parse, "expected a string");
  return v.get<std::string>();
}

std::uint64_t uint_member(const Json& obj, const std::string& key, const std::string& pointer) {
  const Json& v = member(obj, key, pointer);
  if (!is_uint(v))
    fail_at(pointer + "/" + key, ErrorCode::Parse, "expected a nonnegative integer");
  return v.get<std::uint64_t>();
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const GroupElement& g) {
  if (g.is_infinite()) return "inf";
  Json a = Json::array();
  for (const auto& c : g.coords()) a.push_back(to_json(c));
  return a;
}

namespace {

Rational rational_from_json(const Json& j, const std::string& pointer) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  if (!j.is_string()) fail_at(pointer, ErrorCode::Parse, "expected a rational string");
  return at_pointer(pointer, [&] { return parse_rational(j.get<std::string>()); });
}

}  // namespace

GroupElement group_from_json(const Json& j, std::size_t rank, const std::string& pointer) {
  if (j.is_string() && j.get<std::string>() == "inf") return GroupElement::infinity();
  std::vector<Rational> coords;
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) coords.push_back(rational_from_json(j[i], pointer + "/" + std::to_string(i)));
  } else {
    coords.push_back(rational_from_json(j, pointer));
  }
  if (coords.size() != rank)
    fail_at(pointer, ErrorCode::InvalidArgument,
            "expected " + std::to_string(rank) + " coordinates, got " + std::to_string(coords.size()));
  return GroupElement(std::move(coords));
}

Json field_to_json(const GroundField& k) {
  Json j;
  switch (k.kind()) {
    case FieldKind::Qp: j["kind"] = "Qp"; break;
    case FieldKind::FpT: j["kind"] = "FpT"; break;
    case FieldKind::QtRank2: j["kind"] = "QtRank2"; break;
  }
  j["p"] = k.prime();
  if (k.kind() == FieldKind::FpT) j["prec"] = k.precision();
  GroundField plain = k.kind() == FieldKind::Qp    ? GroundField::rational_padic(k.prime())
                      : k.kind() == FieldKind::FpT ? GroundField::fp_rational_functions(k.prime(), k.precision())
                                                   : GroundField::qt_rank_two(k.prime());
  if (!(plain == k)) {
    Json g = Json::array();
    for (const auto& b : k.value_group().basis()) g.push_back(to_json(b));
    j["ground_group"] = g;
  }
  return j;
}

FieldPtr field_from_json(const Json& j, const std::string& pointer) {
  const std::string kind = string_member(j, "kind", pointer);
  const std::uint64_t p = uint_member(j, "p", pointer);
  if (p < 2 || p > 1000003) fail_at(pointer + "/p", ErrorCode::InvalidArgument, "prime out of range");
  GroundField k = at_pointer(pointer, [&] {
    if (kind == "Qp") return GroundField::rational_padic(static_cast<std::uint32_t>(p));
    if (kind == "QtRank2") return GroundField::qt_rank_two(static_cast<std::uint32_t>(p));
    if (kind == "FpT") {
      const std::uint64_t prec = j.contains("prec") ? uint_member(j, "prec", pointer) : 0;
      if (prec > 40) fail_at(pointer + "/prec", ErrorCode::InvalidArgument, "precision above 40");
      return GroundField::fp_rational_functions(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(prec));
    }
    fail_at(pointer + "/kind", ErrorCode::InvalidArgument, "unknown field kind \"" + kind + "\"");
  });
  if (j.contains("ground_group")) {
    const Json& g = j["ground_group"];
    const std::string at = pointer + "/ground_group";
    if (!g.is_array()) fail_at(at, ErrorCode::Parse, "expected an array of generators");
    std::vector<GroupElement> gens;
    for (std::size_t i = 0; i < g.size(); ++i) {
      auto e = group_from_json(g[i], k.rank(), at + "/" + std::to_string(i));
      if (e.is_infinite()) fail_at(at + "/" + std::to_string(i), ErrorCode::InvalidArgument, "infinite generator");
      gens.push_back(std::move(e));
    }
    k = at_pointer(at, [&] { return k.with_value_group(Subgroup(k.rank(), std::move(gens))); });
  }
  return std::make_shared<const GroundField>(std::move(k));
}

Json chain_to_json(const Valuation& mu) {
  const GroundField& k = mu.field();
  Json out = Json::array();
  for (const auto& s : mu.steps()) {
    Json j;
    if (const auto* d = std::get_if<DepthZeroStep>(&s)) {
      j["type"] = "depth0";
      j["a"] = Poly::constant(d->center).to_string(k);
      j["gamma"] = to_json(d->gamma);
    } else if (const auto* o = std::get_if<OrdinaryStep>(&s)) {
      j["type"] = "ordinary";
      j["phi"] = o->phi.to_string(k);
      j["gamma"] = to_json(o->gamma);
      if (o->certified) j["key"] = "certified";
    } else {
      const auto& l = std::get<LimitStep>(s);
      j["type"] = "limit";
      j["family"] = Json::parse(l.family->descriptor());
      j["phi"] = l.phi.to_string(k);
      j["gamma"] = to_json(l.gamma);
      if (l.certified) j["key"] = "certified";
    }
    out.push_back(std::move(j));
  }
  return out;
}

Valuation chain_from_json(const FieldPtr& k, const Json& steps, const std::string& pointer) {
  if (!steps.is_array() || steps.empty()) fail_at(pointer, ErrorCode::Parse, "chain must be a nonempty array");
  std::optional<Valuation> mu;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::string at = pointer + "/" + std::to_string(i);
    const Json& s = steps[i];
    const std::string type = string_member(s, "type", at);
    const GroupElement gamma = group_from_json(member(s, "gamma", at), k->rank(), at + "/gamma");
    if (i == 0) {
      if (type != "depth0") fail_at(at + "/type", ErrorCode::InvalidArgument, "chain must start with a depth0 step");
      const std::string a = s.contains("a") ? string_member(s, "a", at) : "0";
      const FieldElement c = at_pointer(at + "/a", [&] { return parse_element(*k, a); });
      mu = at_pointer(at, [&] { return Valuation::depth_zero(k, c, gamma); });
      continue;
    }
    if (mu->has_support())
      fail_at(at, ErrorCode::Domain, "monotonicity: the previous step already has infinite gamma");
    bool certified = false;
    if (s.contains("key")) {
      if (string_member(s, "key", at) != "certified")
        fail_at(at + "/key", ErrorCode::InvalidArgument, "only \"certified\" is accepted");
      certified = true;
    }
    const Poly phi = at_pointer(at + "/phi", [&] { return parse_poly(*k, string_member(s, "phi", at)); });
    if (type == "ordinary") {
      AugmentOptions opt;
      opt.certified = certified;
      opt.seed = 1000 + i;
      mu = at_pointer(at, [&] { return augment(*mu, phi, gamma, opt); });
    } else if (type == "limit") {
      auto fam = make_family(*mu, member(s, "family", at), at + "/family");
      mu = at_pointer(at, [&] { return limit_augment(fam, phi, gamma, certified); });
    } else {
      fail_at(at + "/type", ErrorCode::InvalidArgument, "unknown step type \"" + type + "\"");
    }
  }
  return *mu;
}

Json chain_file_to_json(const Valuation& mu) {
  Json j;
  j["field"] = field_to_json(mu.field());
  j["chain"] = chain_to_json(mu);
  return j;
}

Valuation chain_file_from_json(const Json& j) {
  const FieldPtr k = field_from_json(member(j, "field", ""), "/field");
  return chain_from_json(k, member(j, "chain", ""), "/chain");
}

Json polygon_to_json(const NewtonPolygon& n) {
  Json j;
  Json vs = Json::array();
  for (const auto& v : n.vertices()) vs.push_back(Json::array({to_json(v.n), to_json(v.alpha)}));
  j["vertices"] = vs;
  Json ss = Json::array();
  for (const auto& s : n.sides()) {
    Json side;
    side["slope"] = to_json(s.slope);
    side["length"] = to_json(s.width());
    ss.push_back(side);
  }
  j["sides"] = ss;
  return j;
}

Json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::Parse, what + ": invalid JSON at byte " + std::to_string(e.byte));
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), ErrorCode::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), ErrorCode::Io, "cannot write " + path);
  out << text;
  require(out.good(), ErrorCode::Io, "write failed for " + path);
}

}  // namespace maclane
