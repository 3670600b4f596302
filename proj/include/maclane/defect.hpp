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
#ifndef MACLANE_DEFECT_HPP
#define MACLANE_DEFECT_HPP

#include <optional>
#include <string>
#include <vector>

#include "maclane/valuation.hpp"

namespace maclane {

/// The augmentation mu_{k-1} -> mu_k of a chain, k = 1..depth.
struct AugmentationReport {
  std::size_t step = 0;
  bool limit = false;
  std::int64_t deg_before = 0, deg_after = 0;
  std::int64_t tangent_degree = 0;
  std::uint64_t d = 1;
  std::uint64_t f = 1;
  std::uint64_t e_before = 1;  // e(mu_{k-1})
  std::optional<std::size_t> stabilization_index;
  /// deg_{rho_n}(phi) for the family indices that rise strictly above the base.
  std::vector<std::pair<std::size_t, std::size_t>> degree_sequence;
};

AugmentationReport defect_of_step(const Valuation& mu, std::size_t k);
/// deg t / (e(mu_{k-1}) deg mu_{k-1}) for ordinary steps, 1 for limit steps.
/// Throws Domain when the quotient is not an integer.
std::uint64_t inertia_of_step(const Valuation& mu, std::size_t k);

struct DefectReport {
  std::vector<AugmentationReport> steps;
  std::uint64_t d_total = 1, e_total = 1, f_total = 1, efd = 1;
  /// Product of e(mu_i) over the chain; equals e_total on proper chains.
  std::uint64_t e_product = 1;
  /// Product of deg mu_k / deg mu_{k-1} over limit steps.
  std::uint64_t hensel_product = 1;
  /// Gamma_{mu_{k-1}} = Gamma^0_{mu_k} for every k.
  bool groups_proper = true;
  std::vector<std::string> notes;
};

/// Throws Domain when the chain does not end in support unless `allow_partial`.
DefectReport defect_formula(const Valuation& mu, bool allow_partial = false);

struct EfdSum {
  bool holds = false;
  std::uint64_t sum = 0;
  std::uint64_t degree = 0;
  std::string diff;
};
EfdSum efd_sum_check(const std::vector<DefectReport>& extensions, std::uint64_t degree_of_g);

}  // namespace maclane

#endif
