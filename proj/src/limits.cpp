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
#include "maclane/limits.hpp"

#include <map>

#include "maclane/error.hpp"
#include "maclane/serialize.hpp"

namespace maclane {

StabilityReport probe_stability(const ContinuousFamily& c, const Poly& f, std::size_t window) {
  require(window >= 2, ErrorCode::InvalidArgument, "stability window must be >= 2");
  require(c.horizon() >= window, ErrorCode::InvalidArgument,
          "horizon " + std::to_string(c.horizon()) + " is shorter than the window " + std::to_string(window));
  StabilityReport r{f, false, std::nullopt, std::nullopt, "", {}};
  if (auto idx = c.certificate(f)) {
    require(*idx <= c.horizon(), ErrorCode::InvalidArgument, "certificate index beyond the horizon");
    r.stable = true;
    r.stable_index = *idx;
    r.stable_value = c.member(*idx).evaluate(f);
    r.evidence = "certified";
    return r;
  }
  r.evidence = "window(" + std::to_string(window) + ")";
  for (std::size_t n = 0; n <= c.horizon(); ++n) r.values.push_back(c.member(n).evaluate(f));
  const auto& v = r.values;
  std::size_t s = v.size() - 1;
  while (s > 0 && v[s - 1] == v.back()) --s;
  if (v.size() - s >= window) {
    r.stable = true;
    r.stable_index = s;
    r.stable_value = v.back();
    return r;
  }
  bool rising = true;
  for (std::size_t n = v.size() - window; n + 1 < v.size(); ++n) rising = rising && v[n] < v[n + 1];
  if (rising) return r;
  fail(ErrorCode::Undetermined, "undetermined(horizon " + std::to_string(c.horizon()) + "): values of " +
                                    f.to_string(c.base().field()) + " neither settle nor increase");
}

Valuation limit_augment(const std::shared_ptr<const ContinuousFamily>& c, const Poly& phi, const GroupElement& gamma,
                        bool certified) {
  require(c != nullptr, ErrorCode::InvalidArgument, "null family");
  const Valuation& base = c->base();
  require(phi.is_monic(), ErrorCode::InvalidArgument, "limit key polynomial must be monic");
  require(phi.degree() >= c->degree(), ErrorCode::Domain, "limit key polynomial has degree below the family degree");
  require(gamma.is_infinite() || gamma.rank() == base.field().rank(), ErrorCode::InvalidArgument,
          "gamma has the wrong rank");
  const auto probe = probe_stability(*c, phi, 2);
  require(!probe.stable, ErrorCode::Domain,
          phi.to_string(base.field()) + " is stable along the family, so it is not a limit key polynomial");
  const Poly x = Poly::x(base.characteristic());
  for (std::int64_t k = 0; k < phi.degree(); ++k) {
    const Poly xk = x.pow(static_cast<std::uint64_t>(k));
    require(probe_stability(*c, xk, 2).stable, ErrorCode::Domain,
            xk.to_string(base.field()) + " is unstable, so " + phi.to_string(base.field()) +
                " does not have minimal degree");
  }
  for (std::size_t n = 0; n < probe.values.size(); ++n)
    require(probe.values[n] < gamma, ErrorCode::Domain,
            "monotonicity: gamma " + gamma.to_string() + " must exceed rho_" + std::to_string(n) + "(phi) = " +
                probe.values[n].to_string());
  return base.extended_unchecked(LimitStep{c, phi, gamma, certified});
}

// ---------------------------------------------------------------------------
// Recipes

DigitData gaussian_digit_data(std::uint32_t p, std::size_t horizon) {
  require(p % 4 == 1, ErrorCode::InvalidArgument, "gaussian_digits needs p = 1 mod 4, got " + std::to_string(p));
  DigitData d;
  for (std::uint32_t r = 1; r < p; ++r)
    if ((static_cast<std::uint64_t>(r) * r + 1) % p == 0) {
      d.leading = r;
      break;
    }
  require(d.leading != 0, ErrorCode::Internal, "no square root of -1 mod p");
  BigInt current = d.leading, modulus = p;
  d.truncations.push_back(0);
  d.positions.push_back(0);
  BigInt partial = d.leading;
  const std::uint64_t cap = 64 * (horizon + 2);
  for (std::uint64_t pos = 1; d.positions.size() <= horizon; ++pos) {
    require(pos < cap, ErrorCode::Undetermined, "too many zero digits in the expansion of i");
    const BigInt next_mod = modulus * p;
    std::int64_t digit = -1;
    for (std::uint32_t c = 0; c < p; ++c) {
      const BigInt cand = current + modulus * c;
      if ((cand * cand + 1) % next_mod == 0) {
        digit = c;
        current = cand;
        break;
      }
    }
    require(digit >= 0, ErrorCode::Internal, "square root of -1 does not lift");
    if (digit != 0) {
      d.truncations.push_back(partial);
      d.positions.push_back(pos);
      partial = current;
    }
    modulus = next_mod;
  }
  return d;
}

std::vector<Rational> sqrt_series_coefficients(std::size_t count) {
  std::vector<Rational> out;
  Rational j(1);
  for (std::size_t k = 1; k <= count; ++k) {
    j *= (Rational(1, 2) - Rational(static_cast<unsigned long>(k - 1))) / Rational(static_cast<unsigned long>(k));
    out.push_back(k == 1 ? Rational(1) : j);
  }
  return out;
}

std::vector<std::string> recipe_names() {
  return {"artin_schreier_case1", "artin_schreier_case2", "gaussian_digits", "sqrt_one_plus_t"};
}

namespace {

struct RecipeContext {
  const GroundField& k;
  const Json& j;
  const std::string& pointer;
  std::size_t horizon;
};

void expect_kind(const RecipeContext& rc, FieldKind kind, const std::string& name) {
  if (rc.k.kind() != kind) fail_at(rc.pointer + "/family", ErrorCode::InvalidArgument, name + " needs a different field kind than " + rc.k.describe());
}

std::vector<FamilyPoint> artin_schreier_case1(const RecipeContext& rc) {
  expect_kind(rc, FieldKind::FpT, "artin_schreier_case1");
  const auto& k = rc.k;
  const auto p = k.prime();
  if (k.precision() < rc.horizon + 1)
    fail_at(rc.pointer + "/horizon", ErrorCode::InvalidArgument,
            "precision insufficient for horizon: horizon " + std::to_string(rc.horizon) + " needs prec >= " +
                std::to_string(rc.horizon + 1) + ", field has " + std::to_string(k.precision()));
  // a = t^-1 and a^(1/p^i) = u^(-p^(m-i)).
  const GroupElement va = k.value(k.t().inverse());
  std::vector<FamilyPoint> out;
  FieldElement an = k.zero();
  std::uint64_t step = k.t_exponent();
  Rational scale(1);
  for (std::size_t n = 0; n <= rc.horizon; ++n) {
    if (n > 0) {
      step /= p;
      an += FieldElement::generator_power(-static_cast<std::int64_t>(step), p);
    }
    scale /= p;
    out.push_back({Poly::x_minus(an), va.scaled(scale)});
  }
  return out;
}

std::vector<FamilyPoint> artin_schreier_case2(const RecipeContext& rc) {
  expect_kind(rc, FieldKind::FpT, "artin_schreier_case2");
  const auto& k = rc.k;
  const auto p = k.prime();
  std::uint64_t root = 0;
  if (rc.j.contains("root")) root = uint_member(rc.j, "root", rc.pointer);
  if (root >= p) fail_at(rc.pointer + "/root", ErrorCode::InvalidArgument, "root index must be below p");
  // a = t, a_n = sum_{i<=n} a^(p^i).
  const FieldElement a = k.t();
  const GroupElement va = k.value(a);
  std::vector<FamilyPoint> out;
  FieldElement an = k.from_rational(static_cast<unsigned long>(root));
  FieldElement power = a;
  Rational scale(1);
  for (std::size_t n = 0; n <= rc.horizon; ++n) {
    an += power;
    power = power.pow(p);
    scale *= p;
    out.push_back({Poly::x_minus(an), va.scaled(scale)});
  }
  return out;
}

std::vector<FamilyPoint> gaussian_digits(const RecipeContext& rc) {
  expect_kind(rc, FieldKind::QtRank2, "gaussian_digits");
  const auto data = at_pointer(rc.pointer + "/p", [&] { return gaussian_digit_data(rc.k.prime(), rc.horizon); });
  std::vector<FamilyPoint> out;
  for (std::size_t n = 0; n <= rc.horizon; ++n) {
    const FieldElement c = rc.k.from_rational(Rational(2 * data.truncations[n]));
    out.push_back({Poly::x_minus(c), GroupElement({Rational(0), Rational(static_cast<unsigned long>(data.positions[n]))})});
  }
  return out;
}

std::vector<FamilyPoint> sqrt_one_plus_t(const RecipeContext& rc) {
  expect_kind(rc, FieldKind::QtRank2, "sqrt_one_plus_t");
  const auto& k = rc.k;
  const std::string phi_text = rc.j.contains("phi") ? string_member(rc.j, "phi", rc.pointer) : "x^2+4";
  const Poly phi = at_pointer(rc.pointer + "/phi", [&] { return parse_poly(k, phi_text); });
  const auto c = sqrt_series_coefficients(rc.horizon + 1);
  std::vector<FamilyPoint> out;
  FieldElement b = k.zero();
  for (std::size_t n = 0; n <= rc.horizon; ++n) {
    if (n > 0) b += k.from_rational(2 * c[n - 1]) * k.t().pow(static_cast<std::int64_t>(n));
    const Rational next = 2 * c[n];
    const GroupElement gamma({Rational(static_cast<unsigned long>(n + 1)),
                              Rational(static_cast<long>(ord_p(next, k.prime())))});
    out.push_back({phi + Poly::constant(b), gamma});
  }
  return out;
}

std::vector<FamilyPoint> table(const GroundField& k, const Json& j, const std::string& pointer) {
  const Json& pts = member(j, "points", pointer);
  if (!pts.is_array()) fail_at(pointer + "/points", ErrorCode::Parse, "expected an array");
  std::vector<FamilyPoint> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string at = pointer + "/points/" + std::to_string(i);
    const Json& row = pts[i];
    if (!row.is_array() || row.size() != 2 || !row[0].is_string())
      fail_at(at, ErrorCode::Parse, "expected [\"poly\", gamma]");
    Poly phi = at_pointer(at + "/0", [&] { return parse_poly(k, row[0].get<std::string>()); });
    out.push_back({std::move(phi), group_from_json(row[1], k.rank(), at + "/1")});
  }
  return out;
}

}  // namespace

std::shared_ptr<const ContinuousFamily> make_family(const Valuation& base, const Json& j, const std::string& pointer) {
  if (!j.is_object()) fail_at(pointer, ErrorCode::Parse, "family descriptor must be an object");
  const GroundField& k = base.field();
  std::vector<FamilyPoint> points;
  if (j.contains("family")) {
    const std::string name = string_member(j, "family", pointer);
    if (j.contains("p") && uint_member(j, "p", pointer) != k.prime())
      fail_at(pointer + "/p", ErrorCode::InvalidArgument,
              "recipe prime " + std::to_string(uint_member(j, "p", pointer)) + " does not match the field");
    const std::size_t horizon = j.contains("horizon") ? uint_member(j, "horizon", pointer) : 12;
    if (horizon < 1 || horizon > 64) fail_at(pointer + "/horizon", ErrorCode::InvalidArgument, "horizon must be in 1..64");
    const RecipeContext rc{k, j, pointer, horizon};
    if (name == "artin_schreier_case1")
      points = artin_schreier_case1(rc);
    else if (name == "artin_schreier_case2")
      points = artin_schreier_case2(rc);
    else if (name == "gaussian_digits")
      points = gaussian_digits(rc);
    else if (name == "sqrt_one_plus_t")
      points = sqrt_one_plus_t(rc);
    else
      fail_at(pointer + "/family", ErrorCode::InvalidArgument, "unknown family name \"" + name + "\"");
  } else if (j.contains("points")) {
    points = table(k, j, pointer);
  } else {
    fail_at(pointer, ErrorCode::Parse, "family needs \"family\" or \"points\"");
  }
  std::map<std::string, std::size_t> certs;
  if (j.contains("certificates")) {
    const Json& c = j["certificates"];
    if (!c.is_object()) fail_at(pointer + "/certificates", ErrorCode::Parse, "expected an object");
    for (auto it = c.begin(); it != c.end(); ++it) {
      const std::string at = pointer + "/certificates/" + it.key();
      if (!is_uint(it.value())) fail_at(at, ErrorCode::Parse, "expected a nonnegative index");
      const Poly f = at_pointer(at, [&] { return parse_poly(k, it.key()); });
      certs[f.to_string(k)] = it.value().get<std::size_t>();
    }
  }
  return at_pointer(pointer, [&] {
    return std::make_shared<const ContinuousFamily>(base, std::move(points), j.dump(), std::move(certs));
  });
}

}  // namespace maclane
