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
#ifndef MACLANE_RANDOM_HPP
#define MACLANE_RANDOM_HPP

#include <cstdint>
#include <random>

#include "maclane/poly.hpp"

namespace maclane {

inline constexpr std::uint64_t kDefaultSeed = 20260415;

/// Seed from MACLANE_SEED when set and numeric, else kDefaultSeed.
std::uint64_t seed_from_env();

/// Small portable generator; reductions are done by hand so streams agree
/// across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi].
  std::int64_t range(std::int64_t lo, std::int64_t hi);
  bool chance(unsigned percent) { return range(0, 99) < static_cast<std::int64_t>(percent); }

 private:
  std::mt19937_64 engine_;
};

/// Random element with small height; nonzero unless allow_zero.
FieldElement random_element(const GroundField& k, Rng& rng, bool allow_zero = true);
/// Random polynomial of exact degree `degree` (nonzero leading coefficient).
Poly random_poly(const GroundField& k, Rng& rng, std::size_t degree, bool monic = false);

}  // namespace maclane

#endif
