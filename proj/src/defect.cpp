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
#include "maclane/defect.hpp"

#include <algorithm>

#include "maclane/error.hpp"

namespace maclane {

namespace {

std::uint64_t e_of(const Valuation& mu) {
  const auto gd = mu.group_data();
  require(gd.e.has_value(), ErrorCode::Undetermined,
          "undetermined: no multiple of " + mu.top_gamma().to_string() + " in Gamma^0 up to " +
              std::to_string(gd.bound));
  return *gd.e;
}

void check_step(const Valuation& mu, std::size_t k) {
  require(k >= 1 && k < mu.steps().size(), ErrorCode::InvalidArgument,
          "step " + std::to_string(k) + " out of range 1.." + std::to_string(mu.steps().size() - 1));
}

}  // namespace

std::uint64_t inertia_of_step(const Valuation& mu, std::size_t k) {
  check_step(mu, k);
  const Step& s = mu.steps()[k];
  if (is_limit(s)) return 1;
  const Valuation before = mu.prefix(k);
  const std::int64_t t = step_phi(s, mu.characteristic()).degree();
  const std::uint64_t denom = e_of(before) * static_cast<std::uint64_t>(before.degree());
  require(static_cast<std::uint64_t>(t) % denom == 0, ErrorCode::Domain,
          "inertia degree " + std::to_string(t) + "/" + std::to_string(denom) + " of step " + std::to_string(k) +
              " is not an integer; the chain is not proper or not normalized");
  return static_cast<std::uint64_t>(t) / denom;
}

AugmentationReport defect_of_step(const Valuation& mu, std::size_t k) {
  check_step(mu, k);
  const Valuation before = mu.prefix(k);
  const Step& s = mu.steps()[k];
  AugmentationReport r;
  r.step = k;
  r.limit = is_limit(s);
  r.deg_before = before.degree();
  r.deg_after = step_phi(s, mu.characteristic()).degree();
  r.e_before = e_of(before);
  r.f = inertia_of_step(mu, k);
  if (!r.limit) {
    r.tangent_degree = r.deg_after;
    r.d = 1;
    return r;
  }
  const auto& l = std::get<LimitStep>(s);
  const ContinuousFamily& c = *l.family;
  r.tangent_degree = c.degree();
  for (std::size_t n = 0; n <= c.horizon(); ++n) {
    const auto& pt = c.points()[n];
    if (!(c.base().evaluate(pt.phi) < pt.gamma)) continue;
    r.degree_sequence.emplace_back(n, c.member(n).deg_mu(l.phi));
  }
  const auto& seq = r.degree_sequence;
  const std::string where = "undetermined(horizon " + std::to_string(c.horizon()) + "): defect of step " +
                            std::to_string(k);
  require(seq.size() >= 2, ErrorCode::Undetermined, where + " has fewer than two strict family members");
  const std::size_t last = seq.back().second;
  require(seq[seq.size() - 2].second == last, ErrorCode::Undetermined, where + " has not settled");
  const auto lowest = std::min_element(seq.begin(), seq.end(), [](auto& a, auto& b) { return a.second < b.second; });
  require(lowest->second == last, ErrorCode::Undetermined, where + ": the degrees dip below their final value");
  require(last >= 1, ErrorCode::Domain, "defect of step " + std::to_string(k) + " came out as 0");
  std::size_t i = seq.size() - 1;
  while (i > 0 && seq[i - 1].second == last) --i;
  r.stabilization_index = seq[i].first;
  r.d = last;
  return r;
}

DefectReport defect_formula(const Valuation& mu, bool allow_partial) {
  require(allow_partial || mu.has_support(), ErrorCode::Domain,
          "defect formula needs a chain ending with gamma = inf");
  DefectReport out;
  for (std::size_t k = 1; k < mu.steps().size(); ++k) {
    out.steps.push_back(defect_of_step(mu, k));
    const auto& r = out.steps.back();
    out.d_total *= r.d;
    out.f_total *= r.f;
    if (r.limit) out.hensel_product *= static_cast<std::uint64_t>(r.deg_after / std::max<std::int64_t>(r.deg_before, 1));
  }
  const GroundField& k = mu.field();
  const auto top = mu.group_data();
  const auto index = top.gamma_mu.index_of(k.value_group());
  require(index.has_value() && index->fits_ulong_p(), ErrorCode::Domain,
          "the value group of the chain has infinite index over the ground group");
  out.e_total = index->get_ui();
  for (std::size_t n = 1; n <= mu.steps().size(); ++n) {
    const Valuation pre = mu.prefix(n);
    out.e_product *= e_of(pre);
    if (n >= 2 && !(mu.prefix(n - 1).group_data().gamma_mu == pre.group_data().gamma0)) {
      out.groups_proper = false;
      out.notes.push_back("Gamma of mu_" + std::to_string(n - 2) + " differs from Gamma^0 of mu_" +
                          std::to_string(n - 1));
    }
  }
  if (out.groups_proper && out.e_product != out.e_total)
    out.notes.push_back("index " + std::to_string(out.e_total) + " differs from the product of e(mu_i) " +
                        std::to_string(out.e_product));
  for (const auto& r : out.steps)
    if (r.limit && r.stabilization_index && *r.stabilization_index > 0)
      out.notes.push_back("step " + std::to_string(r.step) + " settles at family index " +
                          std::to_string(*r.stabilization_index));
  out.efd = out.e_total * out.f_total * out.d_total;
  return out;
}

EfdSum efd_sum_check(const std::vector<DefectReport>& extensions, std::uint64_t degree_of_g) {
  EfdSum s;
  s.degree = degree_of_g;
  std::string terms;
  for (const auto& r : extensions) {
    s.sum += r.efd;
    if (!terms.empty()) terms += " + ";
    terms += std::to_string(r.e_total) + "*" + std::to_string(r.f_total) + "*" + std::to_string(r.d_total);
  }
  s.holds = s.sum == degree_of_g;
  if (!s.holds) s.diff = terms + " = " + std::to_string(s.sum) + " != " + std::to_string(degree_of_g);
  return s;
}

}  // namespace maclane
