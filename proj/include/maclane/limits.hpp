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
#ifndef MACLANE_LIMITS_HPP
#define MACLANE_LIMITS_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "maclane/valuation.hpp"

namespace maclane {

struct StabilityReport {
  Poly poly;
  bool stable = false;
  std::optional<std::size_t> stable_index;
  std::optional<GroupElement> stable_value;
  std::string evidence;  // "certified" or "window(w)"
  std::vector<GroupElement> values;  // rho_n(f), n = 0..horizon (empty if certified)
};

/// Certificates win. Otherwise f is stable when the last `window` values
/// agree and unstable when they strictly increase; anything else throws
/// Undetermined.
StabilityReport probe_stability(const ContinuousFamily& c, const Poly& f, std::size_t window = 2);

/// [C; phi, gamma] on top of the family base. Checks that phi is unstable,
/// that x^k is stable for k < deg phi and that gamma exceeds every rho_n(phi).
Valuation limit_augment(const std::shared_ptr<const ContinuousFamily>& c, const Poly& phi, const GroupElement& gamma,
                        bool certified = false);

/// Builds a family over `base` from a recipe or table descriptor:
///   {"family":"artin_schreier_case1","p":2,"horizon":5}
///   {"family":"artin_schreier_case2","p":5,"horizon":6,"root":0}
///   {"family":"gaussian_digits","p":5,"horizon":8}
///   {"family":"sqrt_one_plus_t","p":5,"horizon":8,"phi":"x^2+4"}
///   {"points":[["x-1",["1/2"]],...]}
/// Any form may carry "certificates":{"<poly>":index}. Errors name JSON
/// pointers below `pointer`.
std::shared_ptr<const ContinuousFamily> make_family(const Valuation& base, const nlohmann::ordered_json& descriptor,
                                                    const std::string& pointer = "");
std::vector<std::string> recipe_names();

/// a_n and l_n for the p-adic square root of -1 with the smallest leading
/// digit, found digit by digit: a_n sums the first n nonzero digit terms and
/// l_n is the position of the next nonzero digit. n = 0..horizon.
struct DigitData {
  std::uint32_t leading = 0;
  std::vector<BigInt> truncations;
  std::vector<std::uint64_t> positions;
};
DigitData gaussian_digit_data(std::uint32_t p, std::size_t horizon);

/// c_1 = 1, c_k = binom(1/2, k) for k >= 2, k = 1..count.
std::vector<Rational> sqrt_series_coefficients(std::size_t count);

}  // namespace maclane

#endif
