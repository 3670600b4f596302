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
// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failures.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "maclane/defect.hpp"
#include "maclane/fixtures.hpp"
#include "maclane/keypoly.hpp"
#include "maclane/newton.hpp"
#include "maclane/scenarios.hpp"
#include "support.hpp"

using namespace maclane;
using testing::Gen;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
  std::size_t cases = 0;
};

#define EXPECT(cond, msg)                              \
  do {                                                 \
    ++out.cases;                                       \
    if (!(cond) && out.ok) {                           \
      out.ok = false;                                  \
      std::ostringstream os_;                          \
      os_ << msg;                                      \
      out.note = os_.str();                            \
    }                                                  \
  } while (0)

Rational q(long a, long b) {
  Rational r(a);
  r /= b;
  return r;
}

std::set<std::size_t> min_indices(const std::vector<GroupElement>& v) {
  GroupElement m;
  for (const auto& x : v) m = std::min(m, x);
  std::set<std::size_t> s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] == m) s.insert(i);
  return s;
}

const ContinuousFamily& family_of(const Valuation& w, std::size_t step) {
  return *std::get<LimitStep>(w.steps().at(step)).family;
}

// Case 1: a = 1/t, t = u^(p^m), a^(1/p^i) = u^(-p^(m-i)).
Outcome case1(std::uint32_t p, std::uint32_t horizon) {
  Outcome out;
  const Json params{{"p", p}, {"horizon", horizon}};
  const Scenario s = builtin_scenario("artin-schreier-1", params);
  const Valuation& w = s.chain;
  const GroundField& k = w.field();
  const Poly g = parse_poly(k, s.doc["target"].get<std::string>());
  const auto& fam = family_of(w, 1);
  long pm = 1;
  for (std::uint32_t i = 0; i < k.precision(); ++i) pm *= p;
  testing::Laurent an{p, {}};
  const testing::Laurent a{p, {{-pm, 1}}};
  FieldElement an_field = k.zero();
  long root = pm;
  for (std::uint32_t n = 0; n <= horizon; ++n) {
    if (n > 0) {
      root /= p;
      an.add(-root, 1);
      an_field += FieldElement::generator_power(-root, p);
    }
    const Valuation& rho = fam.member(n);
    EXPECT(rho.key_polynomial() == Poly::x_minus(an_field), "rho_" << n << " key is not x - a_n");
    // g(y + a_n) = y^p - y + g(a_n) in characteristic p.
    const testing::Laurent ga = an.pow(p) + an.neg() + a.neg();
    Rational g_n(-1);
    for (std::uint32_t i = 0; i <= n; ++i) g_n /= p;
    // Expansion values in y = x - a_n: const, y, y^p.
    std::vector<GroupElement> by_index(p + 1);
    by_index[0] = GroupElement::scalar(q(ga.order(), pm));
    by_index[1] = GroupElement::scalar(g_n);
    by_index[p] = GroupElement::scalar(g_n * p);
    std::set<std::size_t> oracle;
    {
      const GroupElement m = std::min({by_index[0], by_index[1], by_index[p]});
      for (std::size_t i : {std::size_t{0}, std::size_t{1}, std::size_t{p}})
        if (by_index[i] == m) oracle.insert(i);
    }
    EXPECT(oracle == std::set<std::size_t>({0, p}), "oracle S-set for n=" << n << " is not {0,p}");
    EXPECT(rho.s_set(g) == oracle, "S_{rho_" << n << "}(g) differs from the oracle");
    EXPECT(rho.deg_mu(g) == p, "deg_{rho_" << n << "}(g) = " << rho.deg_mu(g));
    EXPECT(rho.evaluate(g) == by_index[0], "rho_" << n << "(g) differs from v(g(a_n))");
  }
  const DefectReport r = defect_formula(w);
  EXPECT(r.d_total == p, "d(w/v) = " << r.d_total);
  EXPECT(r.efd == p && static_cast<std::uint64_t>(g.degree()) == p, "efd = " << r.efd);
  return out;
}

// Case 2: a = t, roots j + sum_{i<=n} t^(p^i) of x^p - x + t.
Outcome case2(std::uint32_t p, std::uint32_t horizon) {
  Outcome out;
  const Scenario s = builtin_scenario("artin-schreier-2", Json{{"p", p}, {"horizon", horizon}});
  const GroundField& k = s.chain.field();
  const Poly g = parse_poly(k, s.doc["target"].get<std::string>());
  EXPECT(s.extensions.size() == p, "expected p extensions, got " << s.extensions.size());
  std::vector<DefectReport> reports;
  for (std::uint32_t j = 0; j < s.extensions.size(); ++j) {
    const Valuation& w = s.extensions[j];
    const auto& fam = family_of(w, 1);
    testing::Laurent theta{p, {}};
    if (j != 0) theta.add(0, j);
    long pw = 1;
    for (std::uint32_t n = 0; n <= horizon; ++n) {
      theta.add(pw, 1);
      pw *= p;
      const testing::Laurent gt = theta.pow(p) + theta.neg() + testing::Laurent{p, {{1, 1}}};
      const Rational gamma(pw);  // p^(n+1) v(t)
      std::vector<GroupElement> by_index(p + 1);
      by_index[0] = GroupElement::scalar(Rational(gt.order()));
      by_index[1] = GroupElement::scalar(gamma);
      by_index[p] = GroupElement::scalar(gamma * p);
      std::set<std::size_t> oracle;
      GroupElement m = std::min({by_index[0], by_index[1], by_index[p]});
      for (std::size_t i : {std::size_t{0}, std::size_t{1}, std::size_t{p}})
        if (by_index[i] == m) oracle.insert(i);
      const Valuation& rho = fam.member(n);
      EXPECT(oracle == std::set<std::size_t>({0, 1}), "oracle S-set is not {0,1} at j=" << j << " n=" << n);
      EXPECT(rho.s_set(g) == oracle, "S_{rho_" << n << "}(g) differs from the oracle at j=" << j);
      EXPECT(rho.deg_mu(g) == 1, "deg_{rho_" << n << "}(g) = " << rho.deg_mu(g));
      EXPECT(rho.evaluate(g) == by_index[0], "rho_" << n << "(g) differs from v(g(theta_n)) at j=" << j);
    }
    EXPECT(w.evaluate(g).is_infinite(), "w_" << j << "(g) is finite");
    reports.push_back(defect_formula(w));
    EXPECT(reports.back().d_total == 1, "d = " << reports.back().d_total << " for j=" << j);
  }
  const EfdSum sum = efd_sum_check(reports, static_cast<std::uint64_t>(g.degree()));
  EXPECT(sum.holds && sum.sum == p, "efd sum: " << sum.diff);
  return out;
}

Outcome example93() {
  Outcome out;
  const std::uint32_t p = 5, horizon = 8, digits = 10;
  // Brute-force square root of -1 modulo 5^10 with leading digit 2.
  std::uint64_t mod = 1;
  for (std::uint32_t i = 0; i < digits; ++i) mod *= p;
  std::uint64_t root = 0;
  for (std::uint64_t x = 2; x < mod; x += p)
    if ((x * x + 1) % mod == 0) {
      root = x;
      break;
    }
  EXPECT(root != 0, "no square root of -1 found");
  std::vector<std::uint64_t> ell, trunc;
  std::uint64_t pw = 1, partial = 0;
  for (std::uint32_t pos = 0; pos < digits; ++pos, pw *= p) {
    const std::uint64_t d = (root / pw) % p;
    if (d != 0) {
      ell.push_back(pos);
      trunc.push_back(partial);
    }
    partial += d * pw;
  }
  EXPECT(ell.size() > horizon, "not enough nonzero digits below 5^10");
  if (!out.ok) return out;

  const Scenario s = builtin_scenario("rank-two-qt", Json{{"p", p}, {"horizon", horizon}});
  const Valuation& w = s.chain;
  const GroundField& k = w.field();
  const Poly phi = parse_poly(k, "x^2+4");
  const Poly g = parse_poly(k, "x^4+(2t+4)x^2+t^2");
  const auto& fam = family_of(w, 1);
  for (std::uint32_t n = 0; n <= horizon; ++n) {
    const GroupElement want({Rational(0), Rational(static_cast<unsigned long>(ell[n]))});
    const Valuation& rho = fam.member(n);
    EXPECT(rho.evaluate(phi) == want, "rho_" << n << "(phi) = " << rho.evaluate(phi).to_string() << ", oracle "
                                             << want.to_string());
    const Poly lin = Poly::x_minus(k.from_rational(Rational(static_cast<unsigned long>(2 * trunc[n]))));
    EXPECT(rho.evaluate(lin) == want, "rho_" << n << "(x-2a_n) = " << rho.evaluate(lin).to_string());
  }
  EXPECT(w.evaluate(phi) == GroupElement({Rational(1), Rational(0)}), "w_G(phi) = " << w.evaluate(phi).to_string());
  std::size_t limits = 0;
  for (const auto& st : w.steps()) limits += is_limit(st) ? 1 : 0;
  EXPECT(limits == 2, "chain has " << limits << " limit steps");
  EXPECT(w.evaluate(g).is_infinite(), "w_G(g) = " << w.evaluate(g).to_string());
  return out;
}

std::vector<Valuation> shipped_chains() {
  std::vector<Valuation> out;
  for (const auto& f : standard_fixtures()) out.push_back(f.mu);
  for (const auto& f : ordinary_fixtures()) out.push_back(f.mu);
  for (const auto& b : builtin_scenarios()) out.push_back(builtin_scenario(b.name).chain);
  return out;
}

// Lower hull of the pairwise vertex sums.
std::vector<PolygonPoint> minkowski(const NewtonPolygon& a, const NewtonPolygon& b) {
  std::vector<PolygonPoint> pts;
  for (const auto& x : a.vertices())
    for (const auto& y : b.vertices()) pts.push_back({x.n + y.n, x.alpha + y.alpha});
  return testing::brute_hull(pts);
}

Outcome additivity(std::uint64_t seed) {
  Outcome out;
  Gen gen(seed ^ 0xa11);
  const auto fixtures = standard_fixtures();
  std::set<std::string> fields;
  for (const auto& fx : fixtures) {
    const Valuation& mu = fx.mu;
    fields.insert(mu.field().describe());
    const Poly phi = mu.key_polynomial();
    const GroupElement cut = mu.evaluate(phi);
    for (int i = 0; i < 200; ++i) {
      const Poly g = testing::poly_near(mu.field(), gen, 4, phi);
      const Poly h = testing::poly_near(mu.field(), gen, 4, phi);
      const NewtonPolygon pg = principal(polygon(mu, phi, g), cut);
      const NewtonPolygon ph = principal(polygon(mu, phi, h), cut);
      const NewtonPolygon pgh = principal(polygon(mu, phi, g * h), cut);
      EXPECT(pgh == polygon_add(pg, ph), fx.name << ": N+(gh) != N+(g) + N+(h) for g=" << g.to_string(mu.field()));
      EXPECT(pgh.vertices() == minkowski(pg, ph), fx.name << ": N+(gh) differs from the vertex-sum hull");
      // min S from the expansion values, computed here.
      std::vector<GroupElement> vals;
      const auto coeffs = phi_expand(g, phi);
      for (std::size_t j = 0; j < coeffs.size(); ++j)
        vals.push_back(coeffs[j].is_zero() ? GroupElement::infinity()
                                           : mu.evaluate(coeffs[j]) + cut.scaled(Rational(static_cast<unsigned long>(j))));
      const auto s = min_indices(vals);
      EXPECT(pg.length() == Rational(static_cast<unsigned long>(*s.begin())),
             fx.name << ": length(N+(g)) != min S for g=" << g.to_string(mu.field()));
    }
  }
  EXPECT(fields.size() == 3, "fixtures cover " << fields.size() << " fields");
  return out;
}

Outcome axioms(std::uint64_t seed) {
  Outcome out;
  Gen gen(seed ^ 0xa5);
  for (const auto& mu : shipped_chains()) {
    const Poly phi = mu.key_polynomial();
    for (int i = 0; i < 500; ++i) {
      const Poly f = testing::poly_near(mu.field(), gen, 4, phi);
      const Poly g = testing::poly_near(mu.field(), gen, 4, phi);
      const GroupElement vf = mu.evaluate(f), vg = mu.evaluate(g);
      EXPECT(mu.evaluate(f * g) == vf + vg, mu.describe() << ": mu(fg) != mu(f)+mu(g), f=" << f.to_string(mu.field()));
      const Poly sum = f + g;
      EXPECT(sum.is_zero() || !(mu.evaluate(sum) < std::min(vf, vg)), mu.describe() << ": mu(f+g) < min");
    }
  }
  return out;
}

Outcome minimality(std::uint64_t seed, std::size_t& both_sides) {
  Outcome out;
  Gen gen(seed ^ 0x313);
  std::size_t yes = 0, no = 0;
  for (const auto& fx : standard_fixtures()) {
    const Valuation& mu = fx.mu;
    const Poly phi = mu.key_polynomial();
    for (int i = 0; i < 100; ++i) {
      const Poly f = testing::poly_near(mu.field(), gen, 5, phi);
      const bool rhs = f.degree() == static_cast<std::int64_t>(mu.deg_mu(f)) * mu.degree();
      const bool lhs = is_minimal(mu, f);
      (lhs ? yes : no) += 1;
      EXPECT(lhs == rhs, fx.name << ": is_minimal=" << lhs << " but degree test=" << rhs << " for "
                                 << f.to_string(mu.field()));
    }
  }
  both_sides = std::min(yes, no);
  EXPECT(yes > 0 && no > 0, "only one side of the equivalence was exercised");
  return out;
}

Outcome step_defects() {
  Outcome out;
  std::size_t ordinary = 0, limit = 0;
  for (const auto& mu : shipped_chains())
    for (std::size_t k = 1; k < mu.steps().size(); ++k) {
      const auto r = defect_of_step(mu, k);
      if (r.limit) {
        ++limit;
        EXPECT(r.f == 1 && inertia_of_step(mu, k) == 1, mu.describe() << ": limit step " << k << " has f=" << r.f);
      } else {
        ++ordinary;
        EXPECT(r.d == 1, mu.describe() << ": ordinary step " << k << " has d=" << r.d);
      }
    }
  EXPECT(ordinary > 0 && limit > 0, "fixtures lack ordinary or limit steps");
  return out;
}

Outcome strictness(std::uint64_t seed, std::size_t& both_sides) {
  Outcome out;
  Gen gen(seed ^ 0x57);
  std::size_t yes = 0, no = 0;
  for (const auto& fx : ordinary_fixtures()) {
    const Valuation& nu = fx.mu;
    const Valuation mu = nu.prefix(nu.steps().size() - 1);
    const Poly phi = nu.key_polynomial();
    for (int i = 0; i < 200; ++i) {
      const Poly f = testing::poly_near(mu.field(), gen, 5, phi);
      // min S_{mu,phi}(f) from the expansion in phi, computed here.
      std::vector<GroupElement> vals;
      const auto coeffs = phi_expand(f, phi);
      const GroupElement vphi = mu.evaluate(phi);
      for (std::size_t j = 0; j < coeffs.size(); ++j)
        vals.push_back(coeffs[j].is_zero() ? GroupElement::infinity()
                                           : mu.evaluate(coeffs[j]) + vphi.scaled(Rational(static_cast<unsigned long>(j))));
      const bool rhs = *min_indices(vals).begin() >= 1;
      const bool lhs = mu.evaluate(f) < nu.evaluate(f);
      (lhs ? yes : no) += 1;
      EXPECT(lhs == rhs, fx.name << ": mu(f)<nu(f) is " << lhs << ", min S>=1 is " << rhs << " for "
                                 << f.to_string(mu.field()));
    }
  }
  both_sides = std::min(yes, no);
  EXPECT(yes > 0 && no > 0, "only one side of the equivalence was exercised");
  return out;
}

Outcome hulls(std::uint64_t seed) {
  Outcome out;
  Gen gen(seed ^ 0x9);
  for (int i = 0; i < 500; ++i) {
    const std::size_t rank = static_cast<std::size_t>(gen.between(1, 2));
    std::vector<PolygonPoint> pts;
    const long count = gen.between(1, 12);
    for (long j = 0; j < count; ++j) {
      std::vector<Rational> c;
      for (std::size_t r = 0; r < rank; ++r) c.emplace_back(gen.between(-8, 8), static_cast<unsigned long>(gen.between(1, 3)));
      for (auto& x : c) x.canonicalize();
      pts.push_back({Rational(gen.between(0, 10)), GroupElement(c)});
    }
    const auto lib = NewtonPolygon::hull(pts);
    EXPECT(lib.vertices() == testing::brute_hull(pts), "hull mismatch on set " << i);
  }
  return out;
}

}  // namespace

int main() {
  const std::uint64_t seed = testing::env_seed();
  std::cout << "seed " << seed << "\n";
  int failures = 0;
  auto report = [&](int id, const std::string& what, double limit_s, const std::function<Outcome()>& f) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("error: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && limit_s > 0 && secs > limit_s) {
      o.ok = false;
      o.note = "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_s) + " s";
    }
    failures += o.ok ? 0 : 1;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (o.ok ? "PASS" : "FAIL") << " " << id << " " << what << " [" << o.cases << " checks, " << secs << " s]";
    if (!o.ok) line << ": " << o.note;
    std::cout << line.str() << std::endl;
  };

  report(1, "artin-schreier case 1 (p=2,3; horizon 5)", 10, [] {
    Outcome a = case1(2, 5), b = case1(3, 5);
    if (!a.ok) return a;
    b.cases += a.cases;
    return b;
  });
  report(2, "artin-schreier case 2 (p=3,5; horizon 4)", 10, [] {
    Outcome a = case2(3, 5), b = case2(5, 4);
    if (!a.ok) return a;
    b.cases += a.cases;
    return b;
  });
  report(3, "two limit augmentations over Q(t), p=5, horizon 8", 30, [] { return example93(); });
  report(4, "newton additivity and length = min S", 60, [&] { return additivity(seed); });
  report(5, "valuation axioms on shipped chains", 60, [&] { return axioms(seed); });
  std::size_t mins = 0, stricts = 0;
  report(6, "minimality characterization", 10, [&] { return minimality(seed, mins); });
  report(7, "ordinary steps d=1, limit steps f=1", 0, [] { return step_defects(); });
  report(8, "augmentation strictness", 0, [&] { return strictness(seed, stricts); });
  report(9, "hull against exhaustive oracle", 0, [&] { return hulls(seed); });
  std::cout << "minimality minority side " << mins << ", strictness minority side " << stricts << "\n";
  return failures;
}
