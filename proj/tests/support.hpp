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
// Test-side generators and oracles. Nothing here calls into the library's
// valuation or polygon code.
#ifndef MACLANE_TESTS_SUPPORT_HPP
#define MACLANE_TESTS_SUPPORT_HPP

#include <cstdint>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "maclane/ground_field.hpp"
#include "maclane/newton.hpp"
#include "maclane/poly.hpp"

namespace testing {

using namespace maclane;

inline std::uint64_t env_seed() {
  const char* s = std::getenv("MACLANE_SEED");
  if (s == nullptr || *s == '\0') return 20260415;
  char* end = nullptr;
  const auto v = std::strtoull(s, &end, 10);
  return *end == '\0' ? v : 20260415;
}

// splitmix64
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : s_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  long between(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
  bool coin(int percent) { return between(0, 99) < percent; }

 private:
  std::uint64_t s_;
};

inline FieldElement element(const GroundField& k, Gen& g) {
  const auto ch = k.characteristic();
  for (;;) {
    FieldElement a(ch);
    if (k.kind() == FieldKind::Qp) {
      Rational q(g.between(-12, 12), static_cast<unsigned long>(g.between(1, 6)));
      q.canonicalize();
      if (g.coin(40)) q *= k.prime();
      if (g.coin(20)) q /= k.prime();
      a = k.from_rational(q);
    } else {
      const long terms = g.between(1, 3);
      for (long i = 0; i < terms; ++i) {
        const long c = ch ? g.between(1, ch - 1) : g.between(-7, 7);
        a += k.from_rational(c) * FieldElement::generator_power(g.between(-2, 4), ch);
      }
      if (ch == 0 && g.coin(30)) a = a * k.from_rational(k.prime());
    }
    if (!a.is_zero()) return a;
  }
}

inline Poly poly(const GroundField& k, Gen& g, long degree) {
  std::vector<FieldElement> c;
  for (long i = 0; i < degree; ++i) c.push_back(g.coin(20) ? k.zero() : element(k, g));
  c.push_back(element(k, g));
  return Poly(std::move(c), k.characteristic());
}

/// phi^j * h plus, sometimes, a remainder scaled by a high power of the
/// uniformizer, so that in(phi) divides in(f) reasonably often.
inline Poly poly_near(const GroundField& k, Gen& g, long max_degree, const Poly& phi) {
  const long degree = g.between(1, max_degree);
  if (!g.coin(40) || phi.degree() > degree) return poly(k, g, degree);
  const long j = g.between(1, degree / phi.degree());
  const long rest = degree - j * phi.degree();
  Poly f = phi.pow(static_cast<std::uint64_t>(j)) * (rest == 0 ? Poly::constant(element(k, g)) : poly(k, g, rest));
  if (g.coin(60)) {
    const FieldElement heavy = k.kind() == FieldKind::Qp ? k.from_rational(k.prime()).pow(g.between(3, 7))
                                                         : k.t().pow(g.between(3, 7));
    f = f + poly(k, g, phi.degree() - 1).scaled(heavy);
  }
  return f;
}

/// Sparse Laurent polynomial over F_p in one variable: exponent -> coefficient.
struct Laurent {
  std::uint32_t p;
  std::map<long, long> c;

  Laurent operator+(const Laurent& o) const {
    Laurent r{p, c};
    for (const auto& [e, v] : o.c) r.add(e, v);
    return r;
  }
  Laurent operator*(const Laurent& o) const {
    Laurent r{p, {}};
    for (const auto& [e1, v1] : c)
      for (const auto& [e2, v2] : o.c) r.add(e1 + e2, v1 * v2);
    return r;
  }
  Laurent neg() const {
    Laurent r{p, {}};
    for (const auto& [e, v] : c) r.add(e, -v);
    return r;
  }
  Laurent pow(unsigned k) const {
    Laurent r{p, {{0, 1}}};
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
  }
  void add(long e, long v) {
    long& slot = c[e];
    slot = ((slot + v) % static_cast<long>(p) + static_cast<long>(p)) % static_cast<long>(p);
    if (slot == 0) c.erase(e);
  }
  long order() const { return c.begin()->first; }
};

/// Lower hull by exhaustion: keep the lowest point per abscissa, then keep
/// a point unless it lies on or above a chord between points on both sides.
inline std::vector<PolygonPoint> brute_hull(const std::vector<PolygonPoint>& raw) {
  std::map<Rational, GroupElement> low;
  for (const auto& q : raw) {
    if (q.alpha.is_infinite()) continue;
    auto it = low.find(q.n);
    if (it == low.end() || q.alpha < it->second) low[q.n] = q.alpha;
  }
  std::vector<PolygonPoint> pts;
  for (const auto& [n, a] : low) pts.push_back({n, a});
  std::vector<PolygonPoint> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool vertex = true;
    for (std::size_t a = 0; a < i && vertex; ++a)
      for (std::size_t b = i + 1; b < pts.size() && vertex; ++b) {
        const Rational w = (pts[i].n - pts[a].n) / (pts[b].n - pts[a].n);
        std::vector<Rational> chord;
        for (std::size_t r = 0; r < pts[i].alpha.rank(); ++r)
          chord.push_back(pts[a].alpha[r] + w * (pts[b].alpha[r] - pts[a].alpha[r]));
        if (!(pts[i].alpha < GroupElement(chord))) vertex = false;
      }
    if (vertex) out.push_back(pts[i]);
  }
  return out;
}

}  // namespace testing

#endif
