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
#ifndef MACLANE_KEYPOLY_HPP
#define MACLANE_KEYPOLY_HPP

#include <optional>
#include <string>
#include <vector>

#include "maclane/valuation.hpp"

namespace maclane {

/// f is mu-minimal: the top term of its expansion in the key polynomial of
/// mu is a constant multiple of phi^r and attains mu(f).
bool is_minimal(const Valuation& mu, const Poly& f);

/// in(phi) | in(f), read as min S_{mu,phi}(f) >= 1.
bool divides_initial(const Valuation& mu, const Poly& phi, const Poly& f);

struct TangentDirection {
  Poly representative;
  std::int64_t degree;
  /// "chain" when nu extends mu, "basis" when decided on a test basis.
  std::string evidence;
};

/// Extra polynomials may be supplied to widen the test basis used when nu
/// does not extend mu's chain.
TangentDirection tangent_direction(const Valuation& mu, const Valuation& nu,
                                   const std::vector<Poly>& extra_basis = {}, std::size_t basis_degree = 6);

struct KeyScreen {
  bool minimal = false;
  bool passed = false;
  std::size_t samples = 0;
  std::size_t informative = 0;  // products whose initial form is divisible
  std::optional<std::pair<Poly, Poly>> witness;  // factors violating primality
};

/// Minimality plus a randomized primality test on in(phi).
KeyScreen key_screen(const Valuation& mu, const Poly& phi, std::uint64_t seed, std::size_t samples = 48);

struct AugmentOptions {
  bool certified = false;
  std::uint64_t seed = 1;
  std::size_t samples = 48;
};

/// [mu; phi, gamma] after the checks gamma > mu(phi) and the key screen.
Valuation augment(const Valuation& mu, const Poly& phi, const GroupElement& gamma, const AugmentOptions& opt = {});

/// Structural equality of chains.
bool same_chain(const Valuation& a, const Valuation& b);

}  // namespace maclane

#endif
