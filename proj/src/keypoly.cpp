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
#include "maclane/keypoly.hpp"

#include "maclane/error.hpp"
#include "maclane/random.hpp"

namespace maclane {

namespace {

bool same_step(const Step& a, const Step& b) {
  if (a.index() != b.index()) return false;
  if (const auto* x = std::get_if<DepthZeroStep>(&a)) {
    const auto& y = std::get<DepthZeroStep>(b);
    return x->center == y.center && x->gamma == y.gamma;
  }
  if (const auto* x = std::get_if<OrdinaryStep>(&a)) {
    const auto& y = std::get<OrdinaryStep>(b);
    return x->phi == y.phi && x->gamma == y.gamma;
  }
  const auto& x = std::get<LimitStep>(a);
  const auto& y = std::get<LimitStep>(b);
  return x.family == y.family && x.phi == y.phi && x.gamma == y.gamma;
}

bool is_prefix(const Valuation& a, const Valuation& b) {
  if (!(a.field() == b.field()) || a.steps().size() > b.steps().size()) return false;
  for (std::size_t i = 0; i < a.steps().size(); ++i)
    if (!same_step(a.steps()[i], b.steps()[i])) return false;
  return true;
}

GroupElement tiny_increment(const GroupElement& g) {
  return g + GroupElement::unit(g.rank(), g.rank() - 1, 1);
}

}  // namespace

bool same_chain(const Valuation& a, const Valuation& b) {
  return a.steps().size() == b.steps().size() && is_prefix(a, b);
}

bool is_minimal(const Valuation& mu, const Poly& f) {
  require(!mu.has_support(), ErrorCode::Domain, "minimality needs a valuation with trivial support");
  require(!f.is_zero(), ErrorCode::Domain, "minimality of the zero polynomial");
  const auto coeffs = phi_expand(f, mu.key_polynomial());
  const std::size_t r = coeffs.size() - 1;
  if (coeffs[r].degree() != 0) return false;
  GroupElement top = mu.field().value(coeffs[r].coeff(0));
  if (r > 0) top += static_cast<std::int64_t>(r) * mu.top_gamma();
  return mu.evaluate(f) == top;
}

bool divides_initial(const Valuation& mu, const Poly& phi, const Poly& f) {
  require(!f.is_zero(), ErrorCode::Domain, "initial form of the zero polynomial");
  const auto s = phi == mu.key_polynomial() ? mu.s_set(f) : mu.s_set(f, phi);
  return *s.begin() >= 1;
}

TangentDirection tangent_direction(const Valuation& mu, const Valuation& nu, const std::vector<Poly>& extra_basis,
                                   std::size_t basis_degree) {
  require(!same_chain(mu, nu), ErrorCode::Domain, "no tangent direction: the valuations coincide");
  if (is_prefix(mu, nu)) {
    const Step& next = nu.steps()[mu.steps().size()];
    if (const auto* o = std::get_if<OrdinaryStep>(&next)) return {o->phi, o->phi.degree(), "chain"};
    if (const auto* l = std::get_if<LimitStep>(&next)) {
      for (const auto& pt : l->family->points())
        if (mu.evaluate(pt.phi) < pt.gamma) return {pt.phi, mu.degree(), "chain"};
      fail(ErrorCode::Domain, "family never rises above its base");
    }
    fail(ErrorCode::Internal, "depth-zero step inside a chain");
  }
  const auto ch = mu.characteristic();
  std::vector<Poly> basis;
  for (std::size_t k = 1; k <= basis_degree; ++k) basis.push_back(Poly::x(ch).pow(k));
  for (const auto* v : {&mu, &nu})
    for (const auto& s : v->steps()) basis.push_back(step_phi(s, ch));
  for (const auto& f : extra_basis)
    if (f.is_monic()) basis.push_back(f);
  std::optional<Poly> best;
  for (const auto& f : basis) {
    const GroupElement a = mu.evaluate(f), b = nu.evaluate(f);
    if (b < a)
      fail(ErrorCode::Domain, "mu is not below nu on the test basis: " + f.to_string(mu.field()) + " has values " +
                                  a.to_string() + " > " + b.to_string());
    if (a < b && (!best || f.degree() < best->degree())) best = f;
  }
  require(best.has_value(), ErrorCode::Domain, "mu and nu agree on the test basis");
  return {*best, best->degree(), "basis"};
}

KeyScreen key_screen(const Valuation& mu, const Poly& phi, std::uint64_t seed, std::size_t samples) {
  KeyScreen out;
  out.minimal = phi.is_monic() && phi.degree() >= 1 && is_minimal(mu, phi);
  if (!out.minimal) return out;
  const Valuation nu = mu.extended_unchecked(OrdinaryStep{phi, tiny_increment(mu.evaluate(phi)), false});
  auto divisible = [&](const Poly& f) { return mu.evaluate(f) < nu.evaluate(f); };
  Rng rng(seed);
  const auto d = static_cast<std::int64_t>(phi.degree());
  for (std::size_t s = 0; s < samples; ++s) {
    const Poly f = random_poly(mu.field(), rng, static_cast<std::size_t>(rng.range(1, d)), true);
    const Poly g = random_poly(mu.field(), rng, static_cast<std::size_t>(rng.range(1, d)), true);
    ++out.samples;
    if (!divisible(f * g)) continue;
    ++out.informative;
    if (!divisible(f) && !divisible(g)) {
      out.witness = std::make_pair(f, g);
      return out;
    }
  }
  out.passed = true;
  return out;
}

Valuation augment(const Valuation& mu, const Poly& phi, const GroupElement& gamma, const AugmentOptions& opt) {
  require(!mu.has_support(), ErrorCode::Domain, "cannot augment a valuation with nontrivial support");
  require(phi.is_monic() && phi.degree() >= 1, ErrorCode::InvalidArgument, "key polynomial must be monic of degree >= 1");
  require(gamma.is_infinite() || gamma.rank() == mu.field().rank(), ErrorCode::InvalidArgument,
          "gamma has the wrong rank");
  const GroupElement below = mu.evaluate(phi);
  require(below < gamma, ErrorCode::Domain,
          "monotonicity: gamma " + gamma.to_string() + " must exceed mu(phi) = " + below.to_string());
  if (!opt.certified) {
    const auto screen = key_screen(mu, phi, opt.seed, opt.samples);
    require(screen.minimal, ErrorCode::Domain, phi.to_string(mu.field()) + " is not mu-minimal");
    require(screen.passed, ErrorCode::Domain, phi.to_string(mu.field()) + " fails the key polynomial screen");
  }
  return mu.extended_unchecked(OrdinaryStep{phi, gamma, opt.certified});
}

}  // namespace maclane
