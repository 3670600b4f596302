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
#include "maclane/selftest.hpp"

#include <algorithm>
#include <functional>

#include "maclane/defect.hpp"
#include "maclane/fixtures.hpp"
#include "maclane/keypoly.hpp"
#include "maclane/newton.hpp"
#include "maclane/scenarios.hpp"

namespace maclane {

namespace {

FieldElement heavy(const GroundField& k, std::int64_t power) {
  if (k.kind() == FieldKind::Qp) return k.from_rational(Rational(BigInt(k.prime()))).pow(power);
  return k.t().pow(power);
}

class Runner {
 public:
  explicit Runner(SelftestResult& r) : r_(r) {}

  void check(const std::string& name, const std::function<void(SelftestCheck&)>& body) {
    SelftestCheck c;
    c.name = name;
    try {
      body(c);
    } catch (const Error& e) {
      c.passed = false;
      if (c.detail.empty()) c.detail = std::string("error: ") + e.what();
    }
    r_.checks.push_back(std::move(c));
  }

 private:
  SelftestResult& r_;
};

void expect(SelftestCheck& c, bool ok, const std::function<std::string()>& what) {
  ++c.cases;
  if (ok || !c.passed) {
    if (!ok) c.passed = false;
    return;
  }
  c.passed = false;
  c.detail = what();
}

}  // namespace

Poly sample_poly(const GroundField& k, Rng& rng, std::size_t max_degree, const Poly* phi) {
  const auto deg = static_cast<std::size_t>(rng.range(1, static_cast<std::int64_t>(max_degree)));
  if (phi == nullptr || !rng.chance(35) || static_cast<std::size_t>(phi->degree()) > deg)
    return random_poly(k, rng, deg);
  const auto pd = static_cast<std::size_t>(phi->degree());
  const auto j = static_cast<std::size_t>(rng.range(1, static_cast<std::int64_t>(deg / pd)));
  const std::size_t rest = deg - j * pd;
  Poly h = rest == 0 ? Poly::constant(random_element(k, rng, false)) : random_poly(k, rng, rest);
  Poly f = phi->pow(j) * h;
  if (rng.chance(60)) f = f + random_poly(k, rng, pd - 1).scaled(heavy(k, rng.range(3, 8)));
  return f.is_zero() ? h : f;
}

bool SelftestResult::all_ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

Json SelftestResult::to_json() const {
  Json j;
  j["seed"] = seed;
  Json cs = Json::array();
  for (const auto& c : checks) {
    Json x;
    x["name"] = c.name;
    x["passed"] = c.passed;
    x["cases"] = c.cases;
    if (!c.detail.empty()) x["detail"] = c.detail;
    cs.push_back(x);
  }
  j["checks"] = cs;
  j["ok"] = all_ok();
  return j;
}

SelftestResult run_selftest(std::uint64_t seed, bool quick) {
  SelftestResult res;
  res.seed = seed;
  Runner run(res);
  const std::size_t scale = quick ? 4 : 1;
  const auto fixtures = standard_fixtures();
  const auto ordinary = ordinary_fixtures();

  run.check("valuation axioms", [&](SelftestCheck& c) {
    Rng rng(seed ^ 0x1111);
    for (const auto& fx : fixtures) {
      const auto& mu = fx.mu;
      const Poly phi = mu.key_polynomial();
      for (std::size_t i = 0; i < 200 / scale; ++i) {
        const Poly f = sample_poly(mu.field(), rng, 4, &phi), g = sample_poly(mu.field(), rng, 4, &phi);
        const auto vf = mu(f), vg = mu(g);
        expect(c, mu(f * g) == vf + vg, [&] { return fx.name + ": mu(fg) != mu(f)+mu(g) for " + f.to_string(mu.field()); });
        const Poly s = f + g;
        expect(c, s.is_zero() || !(mu(s) < std::min(vf, vg)),
               [&] { return fx.name + ": mu(f+g) < min for " + f.to_string(mu.field()); });
      }
    }
  });

  run.check("newton additivity", [&](SelftestCheck& c) {
    Rng rng(seed ^ 0x2222);
    for (const auto& fx : fixtures) {
      const auto& mu = fx.mu;
      const Poly phi = mu.key_polynomial();
      const GroupElement cut = mu(phi);
      for (std::size_t i = 0; i < 100 / scale; ++i) {
        const Poly f = sample_poly(mu.field(), rng, 4, &phi), g = sample_poly(mu.field(), rng, 4, &phi);
        const auto pf = principal(polygon(mu, phi, f), cut), pg = principal(polygon(mu, phi, g), cut);
        expect(c, principal(polygon(mu, phi, f * g), cut) == polygon_add(pf, pg),
               [&] { return fx.name + ": principal(fg) != principal(f)+principal(g)"; });
        expect(c, pf.length() == Rational(static_cast<unsigned long>(*mu.s_set(f).begin())),
               [&] { return fx.name + ": length of the principal part differs from min S"; });
      }
    }
  });

  run.check("minimality", [&](SelftestCheck& c) {
    Rng rng(seed ^ 0x3333);
    for (const auto& fx : fixtures) {
      const auto& mu = fx.mu;
      const Poly phi = mu.key_polynomial();
      for (std::size_t i = 0; i < 100 / scale; ++i) {
        const Poly f = sample_poly(mu.field(), rng, 5, &phi);
        const bool rhs = f.degree() == static_cast<std::int64_t>(mu.deg_mu(f)) * mu.degree();
        expect(c, is_minimal(mu, f) == rhs, [&] { return fx.name + ": minimality mismatch for " + f.to_string(mu.field()); });
      }
    }
  });

  run.check("augmentation strictness", [&](SelftestCheck& c) {
    Rng rng(seed ^ 0x4444);
    for (const auto& fx : ordinary) {
      const auto& nu = fx.mu;
      const Valuation mu = nu.prefix(nu.steps().size() - 1);
      const Poly phi = nu.key_polynomial();
      for (std::size_t i = 0; i < 200 / scale; ++i) {
        const Poly f = sample_poly(mu.field(), rng, 5, &phi);
        expect(c, (mu(f) < nu(f)) == (*mu.s_set(f, phi).begin() >= 1),
               [&] { return fx.name + ": strictness mismatch for " + f.to_string(mu.field()); });
      }
    }
  });

  run.check("step defects and inertia", [&](SelftestCheck& c) {
    std::vector<Valuation> chains;
    for (const auto& fx : fixtures) chains.push_back(fx.mu);
    for (const auto& fx : ordinary) chains.push_back(fx.mu);
    for (const auto& b : builtin_scenarios()) chains.push_back(builtin_scenario(b.name).chain);
    for (const auto& mu : chains)
      for (std::size_t k = 1; k < mu.steps().size(); ++k) {
        const auto r = defect_of_step(mu, k);
        expect(c, r.limit ? r.f == 1 : r.d == 1, [&] { return "step " + std::to_string(k) + " of " + mu.describe(); });
      }
    bool raised = false;
    try {
      inertia_of_step(misnormalized_fixture().mu, 1);
    } catch (const Error& e) {
      raised = e.code() == ErrorCode::Domain;
    }
    expect(c, raised, [] { return "non-integral inertia was not rejected"; });
  });

  run.check("hull", [&](SelftestCheck& c) {
    Rng rng(seed ^ 0x5555);
    for (std::size_t i = 0; i < 200 / scale; ++i) {
      const std::size_t rank = static_cast<std::size_t>(rng.range(1, 2));
      std::vector<PolygonPoint> pts;
      const auto count = rng.range(1, 12);
      for (std::int64_t j = 0; j < count; ++j) {
        std::vector<Rational> co;
        for (std::size_t r = 0; r < rank; ++r) co.emplace_back(static_cast<long>(rng.range(-6, 6)));
        pts.push_back({Rational(static_cast<long>(rng.range(0, 8))), GroupElement(co)});
      }
      const auto n = NewtonPolygon::hull(pts);
      // Every input point lies on or above the hull at its abscissa.
      bool ok = true;
      for (const auto& p : pts)
        for (const auto& s : n.sides())
          if (s.left.n <= p.n && p.n <= s.right.n)
            ok = ok && !(p.alpha < s.left.alpha + s.slope.scaled(p.n - s.left.n));
      expect(c, ok, [] { return "a point lies below the hull"; });
    }
  });

  run.check("builtin scenarios", [&](SelftestCheck& c) {
    for (const auto& b : builtin_scenarios()) {
      const auto r = run_scenario(builtin_scenario(b.name));
      expect(c, r.all_ok, [&] { return b.name + " did not meet its declared facts"; });
    }
  });
  return res;
}

}  // namespace maclane
