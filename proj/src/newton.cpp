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
#include "maclane/newton.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include "maclane/error.hpp"

namespace maclane {

GroupElement slope(const PolygonPoint& a, const PolygonPoint& b) {
  require(a.n < b.n, ErrorCode::InvalidArgument, "slope needs increasing abscissas");
  return (b.alpha - a.alpha).scaled(Rational(1) / (b.n - a.n));
}

NewtonPolygon NewtonPolygon::hull(std::vector<PolygonPoint> points) {
  points.erase(std::remove_if(points.begin(), points.end(),
                              [](const PolygonPoint& p) { return p.alpha.is_infinite(); }),
               points.end());
  std::sort(points.begin(), points.end(), [](const PolygonPoint& a, const PolygonPoint& b) {
    if (a.n != b.n) return a.n < b.n;
    return a.alpha < b.alpha;
  });
  NewtonPolygon out;
  auto& h = out.vertices_;
  for (auto& p : points) {
    if (!h.empty() && h.back().n == p.n) continue;  // sorted: the first one is lowest
    while (h.size() >= 2 && slope(h[h.size() - 2], h.back()) >= slope(h[h.size() - 2], p)) h.pop_back();
    h.push_back(std::move(p));
  }
  return out;
}

std::vector<Side> NewtonPolygon::sides() const {
  std::vector<Side> out;
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i)
    out.push_back({vertices_[i], vertices_[i + 1], slope(vertices_[i], vertices_[i + 1])});
  return out;
}

const PolygonPoint& NewtonPolygon::left() const {
  require(!empty(), ErrorCode::Domain, "empty polygon has no endpoints");
  return vertices_.front();
}

const PolygonPoint& NewtonPolygon::right() const {
  require(!empty(), ErrorCode::Domain, "empty polygon has no endpoints");
  return vertices_.back();
}

Rational NewtonPolygon::length() const { return empty() ? Rational(0) : right().n; }

NewtonPolygon polygon(const Valuation& mu, const Poly& phi, const Poly& g) {
  const auto coeffs = phi_expand(g, phi);
  std::vector<PolygonPoint> pts;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    pts.push_back({Rational(static_cast<unsigned long>(i)), mu.evaluate(coeffs[i])});
  }
  return NewtonPolygon::hull(std::move(pts));
}

Component component(const NewtonPolygon& n, const GroupElement& lambda) {
  require(!n.empty(), ErrorCode::Domain, "component of the empty polygon");
  require(lambda.is_finite(), ErrorCode::InvalidArgument, "component needs a finite slope");
  Component c{lambda, 0, 0, GroupElement::infinity()};
  bool first = true;
  for (const auto& v : n.vertices()) {
    const GroupElement val = v.alpha + lambda.scaled(v.n);
    if (first || val < c.intercept) {
      c.intercept = val;
      c.n_lo = c.n_hi = v.n;
      first = false;
    } else if (val == c.intercept) {
      c.n_hi = v.n;
    }
  }
  return c;
}

NewtonPolygon principal(const NewtonPolygon& n, const GroupElement& cutoff) {
  if (n.empty()) return n;
  std::vector<PolygonPoint> pts{n.vertices().front()};
  if (cutoff.is_finite()) {
    const GroupElement bound = -cutoff;
    for (const auto& s : n.sides()) {
      if (!(s.slope < bound)) break;
      pts.push_back(s.right);
    }
  }
  return NewtonPolygon::hull(std::move(pts));
}

NewtonPolygon polygon_add(const NewtonPolygon& a, const NewtonPolygon& b) {
  require(!a.empty() && !b.empty(), ErrorCode::Domain, "polygon_add with an empty operand");
  auto sa = a.sides();
  auto sb = b.sides();
  std::vector<Side> all;
  all.reserve(sa.size() + sb.size());
  std::merge(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(all),
             [](const Side& x, const Side& y) { return x.slope < y.slope; });
  PolygonPoint cur{a.left().n + b.left().n, a.left().alpha + b.left().alpha};
  std::vector<PolygonPoint> pts{cur};
  for (const auto& s : all) {
    cur = {cur.n + s.width(), cur.alpha + (s.right.alpha - s.left.alpha)};
    pts.push_back(cur);
  }
  return NewtonPolygon::hull(std::move(pts));
}

bool is_one_sided(const NewtonPolygon& n, const GroupElement& lambda) {
  require(!n.empty(), ErrorCode::Domain, "one-sidedness of the empty polygon");
  if (n.vertices().size() != 2 || n.left().n != 0) return false;
  return n.sides().front().slope == -lambda;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string point_label(const PolygonPoint& p) {
  return "(" + to_string(p.n) + ", " + p.alpha.to_string() + ")";
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

// Vertices sharing the plotted coordinate with a different full ordinate.
std::vector<bool> ties(const NewtonPolygon& n, std::size_t coordinate) {
  const auto& v = n.vertices();
  std::vector<bool> out(v.size(), false);
  if (v.empty() || v.front().alpha.rank() < 2) return out;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (i != j && v[i].alpha[coordinate] == v[j].alpha[coordinate] && !(v[i].alpha == v[j].alpha))
        out[i] = true;
  return out;
}

void check_coordinate(const NewtonPolygon& n, std::size_t coordinate) {
  if (!n.empty())
    require(coordinate < n.left().alpha.rank(), ErrorCode::InvalidArgument,
            "projection coordinate " + std::to_string(coordinate) + " exceeds the ordinate rank");
}

}  // namespace

std::string render_svg(const NewtonPolygon& n, std::size_t coordinate, const std::string& title) {
  check_coordinate(n, coordinate);
  constexpr double W = 480, H = 320, M = 48;
  std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"320\" viewBox=\"0 0 480 320\">\n";
  s += "<rect width=\"480\" height=\"320\" fill=\"white\"/>\n";
  if (!title.empty())
    s += "<text x=\"240\" y=\"20\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"13\">" +
         xml_escape(title) + "</text>\n";
  if (n.empty()) return s + "<text x=\"240\" y=\"160\" text-anchor=\"middle\">empty</text>\n</svg>\n";
  const auto& v = n.vertices();
  const bool projected = v.front().alpha.rank() >= 2;
  double x0 = v.front().n.get_d(), x1 = v.back().n.get_d();
  double y0 = v.front().alpha[coordinate].get_d(), y1 = y0;
  for (const auto& p : v) {
    y0 = std::min(y0, p.alpha[coordinate].get_d());
    y1 = std::max(y1, p.alpha[coordinate].get_d());
  }
  if (x1 - x0 < 1e-12) x1 = x0 + 1;
  if (y1 - y0 < 1e-12) y1 = y0 + 1;
  auto px = [&](double x) { return M + (x - x0) / (x1 - x0) * (W - 2 * M); };
  auto py = [&](double y) { return H - M - (y - y0) / (y1 - y0) * (H - 2 * M); };
  s += "<line x1=\"" + fmt(M) + "\" y1=\"" + fmt(H - M + 12) + "\" x2=\"" + fmt(W - M) + "\" y2=\"" +
       fmt(H - M + 12) + "\" stroke=\"gray\"/>\n";
  s += "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += " ";
    s += fmt(px(v[i].n.get_d())) + "," + fmt(py(v[i].alpha[coordinate].get_d()));
  }
  s += "\"/>\n";
  const auto tie = ties(n, coordinate);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string cx = fmt(px(v[i].n.get_d())), cy = fmt(py(v[i].alpha[coordinate].get_d()));
    s += "<circle cx=\"" + cx + "\" cy=\"" + cy + "\" r=\"4\" fill=\"black\"/>\n";
    s += "<text x=\"" + cx + "\" y=\"" + fmt(py(v[i].alpha[coordinate].get_d()) - 8) +
         "\" font-family=\"monospace\" font-size=\"11\">" + xml_escape(point_label(v[i])) +
         (tie[i] ? "*" : "") + "</text>\n";
  }
  for (const auto& side : n.sides()) {
    const double mx = (side.left.n.get_d() + side.right.n.get_d()) / 2;
    const double my = (side.left.alpha[coordinate].get_d() + side.right.alpha[coordinate].get_d()) / 2;
    s += "<text x=\"" + fmt(px(mx) + 6) + "\" y=\"" + fmt(py(my) + 14) +
         "\" font-family=\"monospace\" font-size=\"10\" fill=\"blue\">slope " +
         xml_escape(side.slope.to_string()) + "</text>\n";
  }
  if (projected)
    s += "<text x=\"" + fmt(M) + "\" y=\"" + fmt(H - 8) +
         "\" font-family=\"monospace\" font-size=\"10\">plotted coordinate " + std::to_string(coordinate) +
         "; * ties in the plotted coordinate</text>\n";
  return s + "</svg>\n";
}

std::string render_ascii(const NewtonPolygon& n, std::size_t coordinate, const std::string& title) {
  check_coordinate(n, coordinate);
  std::string s;
  if (!title.empty()) s += title + "\n";
  if (n.empty()) return s + "empty polygon\n";
  const auto& v = n.vertices();
  if (v.front().alpha.rank() >= 2) s += "plotted coordinate " + std::to_string(coordinate) + "\n";
  s += "vertices:";
  const auto tie = ties(n, coordinate);
  for (std::size_t i = 0; i < v.size(); ++i) s += " " + point_label(v[i]) + (tie[i] ? "*" : "");
  s += "\n";
  for (const auto& side : n.sides())
    s += "  side " + point_label(side.left) + " -- " + point_label(side.right) + "  slope " +
         side.slope.to_string() + "  width " + to_string(side.width()) + "\n";

  // Grid: one row per distinct plotted ordinate, four columns per unit.
  std::map<Rational, std::vector<std::size_t>, std::greater<>> rows;
  for (std::size_t i = 0; i < v.size(); ++i) rows[v[i].alpha[coordinate]].push_back(i);
  const Rational x0 = v.front().n;
  auto column = [&](const Rational& x) {
    Rational c = (x - x0) * 4;
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
    return static_cast<std::size_t>(q.get_ui());
  };
  const std::size_t width = column(v.back().n) + 1;
  std::size_t label_w = 0;
  for (const auto& [y, _] : rows) label_w = std::max(label_w, to_string(y).size());
  for (const auto& [y, idx] : rows) {
    std::string line(width, ' ');
    for (auto i : idx) line[column(v[i].n)] = '*';
    while (!line.empty() && line.back() == ' ') line.pop_back();
    std::string label = to_string(y);
    s += std::string(label_w - label.size(), ' ') + label + " | " + line + "\n";
  }
  s += std::string(label_w, ' ') + " +-" + std::string(width, '-') + "\n";
  std::string axis(width, ' ');
  for (const auto& p : v) {
    const std::string t = to_string(p.n);
    const std::size_t c = column(p.n);
    for (std::size_t k = 0; k < t.size() && c + k < axis.size(); ++k) axis[c + k] = t[k];
  }
  while (!axis.empty() && axis.back() == ' ') axis.pop_back();
  s += std::string(label_w, ' ') + "   " + axis + "\n";
  return s;
}

}  // namespace maclane
