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
#ifndef MACLANE_NEWTON_HPP
#define MACLANE_NEWTON_HPP

#include <string>
#include <vector>

#include "maclane/valuation.hpp"

namespace maclane {

struct PolygonPoint {
  Rational n;
  GroupElement alpha;

  friend bool operator==(const PolygonPoint& a, const PolygonPoint& b) {
    return a.n == b.n && a.alpha == b.alpha;
  }
};

struct Side {
  PolygonPoint left, right;
  GroupElement slope;  // (alpha' - alpha) / (n' - n)
  Rational width() const { return right.n - left.n; }
};

struct Component {
  GroupElement lambda;
  Rational n_lo, n_hi;
  GroupElement intercept;  // min of alpha + n*lambda
};

/// Lower convex hull in Q x Lambda, stored as its vertices with strictly
/// increasing abscissas and strictly increasing slopes. May be empty.
class NewtonPolygon {
 public:
  NewtonPolygon() = default;
  /// Hull of an arbitrary finite point set; infinite ordinates are dropped.
  static NewtonPolygon hull(std::vector<PolygonPoint> points);

  bool empty() const noexcept { return vertices_.empty(); }
  const std::vector<PolygonPoint>& vertices() const noexcept { return vertices_; }
  std::vector<Side> sides() const;
  const PolygonPoint& left() const;
  const PolygonPoint& right() const;
  /// Abscissa of the right endpoint.
  Rational length() const;

  friend bool operator==(const NewtonPolygon& a, const NewtonPolygon& b) {
    return a.vertices_ == b.vertices_;
  }

 private:
  std::vector<PolygonPoint> vertices_;
};

/// Slope of the segment a -> b; a.n < b.n.
GroupElement slope(const PolygonPoint& a, const PolygonPoint& b);

/// Hull of {(i, mu(a_i))} for the phi-expansion of g.
NewtonPolygon polygon(const Valuation& mu, const Poly& phi, const Poly& g);
Component component(const NewtonPolygon& n, const GroupElement& lambda);
/// Sides of slope strictly less than -cutoff, or the left endpoint.
NewtonPolygon principal(const NewtonPolygon& n, const GroupElement& cutoff);
NewtonPolygon polygon_add(const NewtonPolygon& a, const NewtonPolygon& b);
bool is_one_sided(const NewtonPolygon& n, const GroupElement& lambda);

/// Deterministic drawings. For rank >= 2 ordinates, `coordinate` selects
/// the plotted component; vertices that tie in it are annotated.
std::string render_svg(const NewtonPolygon& n, std::size_t coordinate = 0, const std::string& title = "");
std::string render_ascii(const NewtonPolygon& n, std::size_t coordinate = 0, const std::string& title = "");

}  // namespace maclane

#endif
