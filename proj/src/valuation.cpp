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
#include "maclane/valuation.hpp"

#include "maclane/error.hpp"

namespace maclane {

namespace {

constexpr std::size_t kCacheLimit = 1 << 14;

void append_upoly(std::string& out, const UPoly& u) {
  for (const auto& [e, c] : u.terms()) {
    out += std::to_string(e);
    out += ':';
    out += c.get_str();
    out += ',';
  }
}

GroupElement add_multiple(const GroupElement& base, std::size_t i, const GroupElement& gamma) {
  if (i == 0) return base;
  return base + static_cast<std::int64_t>(i) * gamma;
}

std::string gamma_text(const GroupElement& g) { return g.is_infinite() ? "∞" : g.to_string(); }

}  // namespace

std::string poly_key(const Poly& f) {
  std::string out;
  for (const auto& c : f.coeffs()) {
    append_upoly(out, c.numerator());
    out += '/';
    append_upoly(out, c.denominator());
    out += ';';
  }
  return out;
}

Poly step_phi(const Step& s, std::uint32_t characteristic) {
  if (const auto* d = std::get_if<DepthZeroStep>(&s)) return Poly::x_minus(d->center);
  if (const auto* o = std::get_if<OrdinaryStep>(&s)) return o->phi;
  (void)characteristic;
  return std::get<LimitStep>(s).phi;
}

const GroupElement& step_gamma(const Step& s) {
  return std::visit([](const auto& x) -> const GroupElement& { return x.gamma; }, s);
}

bool is_limit(const Step& s) { return std::holds_alternative<LimitStep>(s); }

// ---------------------------------------------------------------------------
// Valuation

Valuation::Valuation(FieldPtr k, std::vector<Step> steps)
    : field_(std::move(k)), steps_(std::move(steps)), cache_(std::make_shared<Cache>()) {
  cache_->values.resize(steps_.size());
}

Valuation Valuation::depth_zero(FieldPtr k, FieldElement center, GroupElement gamma) {
  require(k != nullptr, ErrorCode::InvalidArgument, "null field");
  k->check(center);
  require(gamma.is_infinite() || gamma.rank() == k->rank(), ErrorCode::InvalidArgument,
          "gamma " + gamma.to_string() + " has the wrong rank for " + k->describe());
  return Valuation(std::move(k), {DepthZeroStep{std::move(center), std::move(gamma)}});
}

Valuation Valuation::prefix(std::size_t n) const {
  require(n >= 1 && n <= steps_.size(), ErrorCode::InvalidArgument,
          "prefix length " + std::to_string(n) + " out of range");
  return Valuation(field_, std::vector<Step>(steps_.begin(), steps_.begin() + static_cast<std::ptrdiff_t>(n)));
}

Valuation Valuation::extended_unchecked(Step s) const {
  std::vector<Step> steps(steps_);
  steps.push_back(std::move(s));
  return Valuation(field_, std::move(steps));
}

Poly Valuation::key_polynomial() const { return step_phi(steps_.back(), characteristic()); }

GroupElement Valuation::evaluate(const Poly& f) const {
  require(f.characteristic() == characteristic(), ErrorCode::InvalidArgument,
          "polynomial characteristic does not match the field");
  return evaluate_at(steps_.size() - 1, f);
}

GroupElement Valuation::evaluate(const FieldElement& a) const { return field_->value(a); }

GroupElement Valuation::evaluate_at(std::size_t level, const Poly& f) const {
  if (f.is_zero()) return GroupElement::infinity();
  if (f.is_constant()) return field_->value(f.coeff(0));
  const std::string key = poly_key(f);
  {
    std::lock_guard<std::mutex> g(cache_->lock);
    auto& m = cache_->values[level];
    if (auto it = m.find(key); it != m.end()) return it->second;
  }
  const Step& s = steps_[level];
  const Poly phi = step_phi(s, characteristic());
  const GroupElement& gamma = step_gamma(s);
  const auto coeffs = phi_expand(f, phi);
  GroupElement best = GroupElement::infinity();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Poly& a = coeffs[i];
    if (a.is_zero()) continue;
    if (i > 0 && gamma.is_infinite()) break;
    GroupElement va;
    if (std::holds_alternative<DepthZeroStep>(s))
      va = field_->value(a.coeff(0));
    else if (const auto* l = std::get_if<LimitStep>(&s))
      va = l->family->stable_value(a);
    else
      va = evaluate_at(level - 1, a);
    best = min(best, add_multiple(va, i, gamma));
  }
  {
    std::lock_guard<std::mutex> g(cache_->lock);
    auto& m = cache_->values[level];
    if (m.size() >= kCacheLimit) m.clear();
    m.emplace(key, best);
  }
  return best;
}

std::vector<ExpansionTerm> Valuation::expansion(const Poly& f) const {
  const Step& s = steps_.back();
  const Poly phi = key_polynomial();
  const GroupElement& gamma = top_gamma();
  const std::size_t level = steps_.size() - 1;
  std::vector<ExpansionTerm> out;
  const auto coeffs = phi_expand(f, phi);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Poly& a = coeffs[i];
    if (a.is_zero()) continue;
    GroupElement va;
    if (std::holds_alternative<DepthZeroStep>(s))
      va = field_->value(a.coeff(0));
    else if (const auto* l = std::get_if<LimitStep>(&s))
      va = l->family->stable_value(a);
    else
      va = evaluate_at(level - 1, a);
    GroupElement value = i == 0 ? va : (gamma.is_infinite() ? gamma : add_multiple(va, i, gamma));
    out.push_back({i, a, std::move(value)});
  }
  return out;
}

std::vector<ExpansionTerm> Valuation::expansion(const Poly& f, const Poly& phi) const {
  const GroupElement vphi = evaluate(phi);
  std::vector<ExpansionTerm> out;
  const auto coeffs = phi_expand(f, phi);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    const GroupElement va = evaluate(coeffs[i]);
    GroupElement value = i == 0 ? va : (vphi.is_infinite() ? vphi : add_multiple(va, i, vphi));
    out.push_back({i, coeffs[i], std::move(value)});
  }
  return out;
}

static std::set<std::size_t> minimal_indices(const std::vector<ExpansionTerm>& terms, const GroupElement& target) {
  std::set<std::size_t> s;
  for (const auto& t : terms)
    if (t.value == target) s.insert(t.index);
  return s;
}

std::set<std::size_t> Valuation::s_set(const Poly& f) const {
  const auto terms = expansion(f);
  GroupElement m = GroupElement::infinity();
  for (const auto& t : terms) m = min(m, t.value);
  require(m.is_finite(), ErrorCode::Domain, "S-set of a polynomial in the support");
  return minimal_indices(terms, m);
}

std::set<std::size_t> Valuation::s_set(const Poly& f, const Poly& phi) const {
  const GroupElement m = evaluate(f);
  require(m.is_finite(), ErrorCode::Domain, "S-set of a polynomial in the support");
  return minimal_indices(expansion(f, phi), m);
}

std::size_t Valuation::deg_mu(const Poly& f) const {
  const auto s = s_set(f);
  if (has_support()) return 0;
  return *s.rbegin();
}

GroupData Valuation::group_data(std::uint64_t bound) const {
  std::vector<GroupElement> gens;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    const Step& s = steps_[i];
    if (const auto* l = std::get_if<LimitStep>(&s))
      for (const auto& pt : l->family->points()) gens.push_back(pt.gamma);
    if (i + 1 < steps_.size()) {
      const GroupElement& g = step_gamma(s);
      require(g.is_finite(), ErrorCode::Domain, "infinite value before the last step");
      gens.push_back(g);
    }
  }
  Subgroup gamma0 = field_->value_group().join(gens);
  const GroupElement& top = top_gamma();
  if (top.is_infinite()) return GroupData{gamma0, gamma0, 1, bound};
  const auto found = smallest_multiple_in(top, gamma0, bound);
  return GroupData{gamma0.join(top), gamma0, found.multiple, bound};
}

std::string Valuation::describe() const {
  std::string s = "v";
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    s += " →^{" + step_phi(steps_[i], characteristic()).to_string(*field_) + "," +
         gamma_text(step_gamma(steps_[i])) + "} ";
    s += i + 1 == steps_.size() && has_support() ? std::string("w_G") : "μ_" + std::to_string(i);
  }
  return s;
}

// ---------------------------------------------------------------------------
// ContinuousFamily

ContinuousFamily::ContinuousFamily(Valuation base, std::vector<FamilyPoint> points, std::string descriptor,
                                   std::map<std::string, std::size_t> certificates)
    : base_(std::move(base)),
      points_(std::move(points)),
      descriptor_(std::move(descriptor)),
      certificates_(std::move(certificates)) {
  require(points_.size() >= 2, ErrorCode::InvalidArgument, "a continuous family needs a horizon >= 1");
  require(base_.top_gamma().is_finite(), ErrorCode::Domain, "family base must have a finite top value");
  const auto deg = base_.degree();
  members_.reserve(points_.size());
  for (std::size_t n = 0; n < points_.size(); ++n) {
    const auto& pt = points_[n];
    const std::string at = "family point " + std::to_string(n);
    require(pt.phi.is_monic(), ErrorCode::InvalidArgument, at + ": key polynomial must be monic");
    require(pt.phi.degree() == deg, ErrorCode::InvalidArgument,
            at + ": degree " + std::to_string(pt.phi.degree()) + " differs from the base degree " +
                std::to_string(deg));
    require(pt.gamma.is_finite(), ErrorCode::InvalidArgument, at + ": family values must be finite");
    const GroupElement below = base_.evaluate(pt.phi);
    require(below <= pt.gamma, ErrorCode::Domain,
            at + ": value " + pt.gamma.to_string() + " is below the base value " + below.to_string());
    members_.push_back(base_.extended_unchecked(OrdinaryStep{pt.phi, pt.gamma, false}));
  }
  for (std::size_t n = 0; n + 1 < points_.size(); ++n) {
    const std::string at = "family points " + std::to_string(n) + "," + std::to_string(n + 1);
    require(points_[n].gamma < points_[n + 1].gamma, ErrorCode::Domain, at + ": values must increase");
    require(members_[n].evaluate(points_[n + 1].phi) < points_[n + 1].gamma, ErrorCode::Domain,
            at + ": members are not strictly increasing");
    require(members_[n + 1].evaluate(points_[n].phi) >= points_[n].gamma, ErrorCode::Domain,
            at + ": members are not increasing");
  }
}

std::optional<std::size_t> ContinuousFamily::certificate(const Poly& f) const {
  if (certificates_.empty()) return std::nullopt;
  auto it = certificates_.find(f.to_string(base_.field()));
  if (it == certificates_.end()) return std::nullopt;
  return it->second;
}

GroupElement ContinuousFamily::stable_value(const Poly& f) const {
  if (f.is_zero()) return GroupElement::infinity();
  if (f.is_constant()) return base_.field().value(f.coeff(0));
  const std::string key = poly_key(f);
  {
    std::lock_guard<std::mutex> g(lock_);
    if (auto it = stable_.find(key); it != stable_.end()) return it->second;
  }
  GroupElement result;
  if (auto idx = certificate(f)) {
    require(*idx <= horizon(), ErrorCode::InvalidArgument, "certificate index beyond the horizon");
    result = members_[*idx].evaluate(f);
  } else {
    GroupElement prev = members_[0].evaluate(f);
    bool found = false;
    for (std::size_t n = 1; n < members_.size(); ++n) {
      GroupElement cur = members_[n].evaluate(f);
      if (cur == prev) {
        found = true;
        break;
      }
      prev = std::move(cur);
    }
    if (!found)
      fail(ErrorCode::Undetermined, "undetermined(horizon " + std::to_string(horizon()) + "): " +
                                        f.to_string(base_.field()) + " is not stable along the family");
    result = prev;
  }
  std::lock_guard<std::mutex> g(lock_);
  if (stable_.size() >= kCacheLimit) stable_.clear();
  stable_.emplace(key, result);
  return result;
}

}  // namespace maclane
