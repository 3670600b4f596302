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
#ifndef MACLANE_SELFTEST_HPP
#define MACLANE_SELFTEST_HPP

#include <string>
#include <vector>

#include "maclane/random.hpp"
#include "maclane/serialize.hpp"

namespace maclane {

struct SelftestCheck {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;  // first failure
};

struct SelftestResult {
  std::uint64_t seed = 0;
  std::vector<SelftestCheck> checks;
  bool all_ok() const;
  Json to_json() const;
};

/// Property suite over the standard fixtures and the builtin scenarios.
/// `quick` cuts the sample counts by four.
SelftestResult run_selftest(std::uint64_t seed, bool quick = false);

/// Random polynomial of degree 1..max_degree. About a third of the samples
/// are built as phi^j * h + (heavy remainder) so that they have a large
/// initial-form order in phi.
Poly sample_poly(const GroundField& k, Rng& rng, std::size_t max_degree, const Poly* phi = nullptr);

}  // namespace maclane

#endif
