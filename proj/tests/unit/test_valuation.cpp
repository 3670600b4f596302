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
#include "doctest.h"
#include "maclane/fixtures.hpp"
#include "maclane/keypoly.hpp"
#include "maclane/newton.hpp"
#include "maclane/serialize.hpp"

using namespace maclane;

namespace {

std::string golden(const std::string& name) { return read_text_file(std::string(MACLANE_GOLDEN_DIR) + "/" + name); }

Valuation gauss2() { return chain_from_text(read_text_file(std::string(MACLANE_DATA_DIR) + "/chains/gauss2.json")); }

GroupElement s(const Rational& q) { return GroupElement::scalar(q); }

}  // namespace

TEST_SUITE("valuation") {
  TEST_CASE("gauss valuation and one augmentation over Q_2") {
    const Valuation mu0 = gauss2();
    const auto& k = mu0.field();
    const Poly f = parse_poly(k, "x^3+2x+4");
    CHECK(mu0.evaluate(f) == s(0));
    const Valuation mu1 = augment(mu0, parse_poly(k, "x"), s(1));
    CHECK(mu1.evaluate(f) == s(2));
    CHECK(mu1.s_set(f) == std::set<std::size_t>{0, 1});
    CHECK(mu1.deg_mu(f) == 1);
    const Valuation half = augment(mu0, parse_poly(k, "x"), s(Rational(1, 2)));
    CHECK(half.evaluate(f) == s(Rational(3, 2)));
    CHECK(half.s_set(f) == std::set<std::size_t>{1, 3});
    CHECK(half.deg_mu(f) == 3);
    REQUIRE(half.group_data().e.has_value());
    CHECK(*half.group_data().e == 2);
  }

  TEST_CASE("describe renders the arrow diagram") {
    const Valuation w = chain_from_text(read_text_file(std::string(MACLANE_DATA_DIR) + "/chains/rank_two_qt.json"));
    CHECK(w.describe() == "v →^{x,(0,0)} μ_0 →^{x^2+4,(1,0)} μ_1 →^{x^4+(2*t+4)*x^2+t^2,∞} w_G");
    CHECK(w.has_support());
  }

  TEST_CASE("prefix keeps the leading steps") {
    const auto fx = standard_fixtures();
    for (const auto& f : fx) {
      const Valuation p0 = f.mu.prefix(1);
      CHECK(p0.steps().size() == 1);
    }
  }
}

TEST_SUITE("newton") {
  TEST_CASE("polygon of x^3+2x+4 over the gauss valuation") {
    const Valuation mu0 = gauss2();
    const Poly phi = parse_poly(mu0.field(), "x");
    const Poly f = parse_poly(mu0.field(), "x^3+2x+4");
    const NewtonPolygon n = polygon(mu0, phi, f);
    REQUIRE(n.sides().size() == 2);
    CHECK(n.sides()[0].slope == s(-1));
    CHECK(n.sides()[1].slope == s(Rational(-1, 2)));
    CHECK(n.length() == 3);
    const std::string title = "N(x, x^3+2*x+4)";
    CHECK(render_ascii(n, 0, title) == golden("gauss2_poly.txt"));
    CHECK(render_svg(n, 0, title) == golden("gauss2_poly.svg"));
  }

  TEST_CASE("principal part keeps slopes below -mu(phi)") {
    const Valuation mu0 = gauss2();
    const auto& k = mu0.field();
    const Valuation mu1 = augment(mu0, parse_poly(k, "x"), s(Rational(3, 4)));
    const Poly f = parse_poly(k, "x^3+2x+4");
    const NewtonPolygon n = polygon(mu1, parse_poly(k, "x"), f);
    const NewtonPolygon p = principal(n, mu1.evaluate(parse_poly(k, "x")));
    CHECK(p.length() == 1);
    CHECK(p.length() == *mu1.s_set(f).begin());
    CHECK(principal(n, s(5)).length() == 0);
  }

  TEST_CASE("hull drops points on chords and repeated abscissae") {
    std::vector<PolygonPoint> pts{{Rational(0), s(4)}, {Rational(1), s(3)}, {Rational(2), s(2)},
                                  {Rational(2), s(7)}, {Rational(4), s(3)}};
    const auto h = NewtonPolygon::hull(pts);
    REQUIRE(h.vertices().size() == 3);
    CHECK(h.vertices()[1].n == 2);
  }

  TEST_CASE("polygon addition concatenates sides by slope") {
    const NewtonPolygon a = NewtonPolygon::hull({{Rational(0), s(2)}, {Rational(2), s(0)}});
    const NewtonPolygon b = NewtonPolygon::hull({{Rational(0), s(3)}, {Rational(1), s(0)}});
    const NewtonPolygon sum = polygon_add(a, b);
    REQUIRE(sum.vertices().size() == 3);
    CHECK(sum.vertices()[1] == PolygonPoint{Rational(1), s(2)});
    CHECK(sum.vertices()[2] == PolygonPoint{Rational(3), s(0)});
  }
}

TEST_SUITE("keypoly") {
  TEST_CASE("augment requires gamma above mu(phi)") {
    const Valuation mu0 = gauss2();
    const Poly phi = parse_poly(mu0.field(), "x+2");
    try {
      (void)augment(mu0, phi, s(0));
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).rfind("monotonicity:", 0) == 0);
    }
  }

  TEST_CASE("minimality and the key screen") {
    const Valuation mu0 = gauss2();
    const auto& k = mu0.field();
    const Valuation mu1 = augment(mu0, parse_poly(k, "x"), s(Rational(1, 2)));
    CHECK(is_minimal(mu1, parse_poly(k, "x^2+2")));
    CHECK_FALSE(is_minimal(mu1, parse_poly(k, "x^2+x+2")));
    const KeyScreen good = key_screen(mu1, parse_poly(k, "x^2+2"), 7);
    CHECK(good.minimal);
    CHECK(good.passed);
    // in(x^2) = in(x)^2 is not prime.
    const KeyScreen bad = key_screen(mu0, parse_poly(k, "x^2"), 7);
    CHECK(bad.minimal);
    CHECK_FALSE(bad.passed);
    CHECK(bad.witness.has_value());
  }

  TEST_CASE("same_chain compares structure") {
    const Valuation a = gauss2();
    CHECK(same_chain(a, gauss2()));
    CHECK_FALSE(same_chain(a, augment(a, parse_poly(a.field(), "x"), s(1))));
  }
}
