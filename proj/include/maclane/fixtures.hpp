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
#ifndef MACLANE_FIXTURES_HPP
#define MACLANE_FIXTURES_HPP

#include <string>
#include <vector>

#include "maclane/valuation.hpp"

namespace maclane {

struct Fixture {
  std::string name;
  Valuation mu;
};

/// Three chains over each of Q_2, F_3(t^(1/3)) and Q(t) with the rank-two
/// valuation at p = 5.
std::vector<Fixture> standard_fixtures();
/// Chains whose last step is an ordinary augmentation, including one with
/// inertia degree 2.
std::vector<Fixture> ordinary_fixtures();
/// A chain whose last step has a non-integral inertia quotient.
Fixture misnormalized_fixture();

/// Loads {"field":...,"chain":[...]} text.
Valuation chain_from_text(const std::string& json);

}  // namespace maclane

#endif
