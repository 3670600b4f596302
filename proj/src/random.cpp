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
#include "maclane/random.hpp"

#include <cstdlib>
#include <string>

namespace maclane {

std::uint64_t seed_from_env() {
  const char* s = std::getenv("MACLANE_SEED");
  if (s == nullptr || *s == '\0') return kDefaultSeed;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used);
    if (used == std::string(s).size()) return v;
  } catch (const std::exception&) {
  }
  return kDefaultSeed;
}

std::int64_t Rng::range(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(next() % span);
}

namespace {

Rational small_rational(Rng& rng, std::uint32_t p) {
  Rational q(static_cast<long>(rng.range(-9, 9)), static_cast<unsigned long>(rng.range(1, 4)));
  q.canonicalize();
  if (p != 0 && rng.chance(40)) {
    const auto k = rng.range(-1, 2);
    for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) q = k < 0 ? Rational(q / p) : Rational(q * p);
  }
  return q;
}

}  // namespace

FieldElement random_element(const GroundField& k, Rng& rng, bool allow_zero) {
  const auto ch = k.characteristic();
  for (;;) {
    FieldElement a(ch);
    switch (k.kind()) {
      case FieldKind::Qp:
        a = k.from_rational(small_rational(rng, k.prime()));
        break;
      case FieldKind::FpT: {
        const auto terms = rng.range(1, 3);
        for (std::int64_t i = 0; i < terms; ++i)
          a += k.from_rational(rng.range(0, k.prime() - 1)) * FieldElement::generator_power(rng.range(-3, 5), ch);
        if (rng.chance(10)) a = a / (k.one() + k.generator());
        break;
      }
      case FieldKind::QtRank2: {
        const auto terms = rng.range(1, 3);
        for (std::int64_t i = 0; i < terms; ++i)
          a += k.from_rational(small_rational(rng, 0)) * FieldElement::generator_power(rng.range(-1, 3), 0);
        if (rng.chance(30)) a = a * k.from_rational(k.prime());
        if (rng.chance(10)) a = a / (k.one() + k.t());
        break;
      }
    }
    if (!a.is_zero() || allow_zero) return a;
  }
}

Poly random_poly(const GroundField& k, Rng& rng, std::size_t degree, bool monic) {
  std::vector<FieldElement> c;
  c.reserve(degree + 1);
  for (std::size_t i = 0; i < degree; ++i) c.push_back(rng.chance(25) ? k.zero() : random_element(k, rng));
  c.push_back(monic ? k.one() : random_element(k, rng, false));
  return Poly(std::move(c), k.characteristic());
}

}  // namespace maclane
