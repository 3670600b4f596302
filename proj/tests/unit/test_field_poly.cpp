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
#include "maclane/error.hpp"
#include "maclane/ground_field.hpp"
#include "maclane/poly.hpp"

using namespace maclane;

TEST_SUITE("groundfield") {
  TEST_CASE("p-adic values on Q") {
    const auto k = GroundField::rational_padic(2);
    CHECK(k.value(k.from_rational(Rational(12, 5))) == GroupElement::scalar(Rational(2)));
    CHECK(k.value(k.from_rational(Rational(3, 8))) == GroupElement::scalar(Rational(-3)));
    CHECK(k.value(k.zero()).is_infinite());
  }

  TEST_CASE("t-adic values on F_p(t^(1/p^m))") {
    const auto k = GroundField::fp_rational_functions(3, 1);
    CHECK(k.value(k.generator()) == GroupElement::scalar(Rational(1, 3)));
    CHECK(k.value(k.t().inverse()) == GroupElement::scalar(Rational(-1)));
    const FieldElement a = k.t() + k.generator();
    CHECK(k.value(a) == GroupElement::scalar(Rational(1, 3)));
    // characteristic 3: 1 + 2 = 0
    CHECK((k.one() + k.from_rational(2)).is_zero());
  }

  TEST_CASE("rank-two values on Q(t)") {
    const auto k = GroundField::qt_rank_two(5);
    CHECK(k.value(k.t()) == GroupElement({Rational(1), Rational(0)}));
    CHECK(k.value(k.from_rational(50)) == GroupElement({Rational(0), Rational(2)}));
    CHECK(k.value(k.t() * k.t() + k.from_rational(Rational(1, 5))) == GroupElement({Rational(0), Rational(-1)}));
  }

  TEST_CASE("parse errors") {
    const auto k = GroundField::rational_padic(3);
    CHECK_THROWS_AS(parse_poly(k, "x^^2"), Error);
    CHECK_THROWS_AS(parse_poly(k, "x + t"), Error);
    CHECK_THROWS_AS(parse_poly(k, "1/0"), Error);
  }
}

TEST_SUITE("polyval") {
  TEST_CASE("parse and print round trip") {
    const auto k = GroundField::qt_rank_two(5);
    for (const char* text : {"x^4+(2*t+4)*x^2+t^2", "x^2+4", "x-14", "(1/2)*x^3-t"}) {
      const Poly f = parse_poly(k, text);
      CHECK(parse_poly(k, f.to_string(k)) == f);
    }
    CHECK(parse_poly(k, "x^4+(2t+4)x^2+t^2").to_string(k) == "x^4+(2*t+4)*x^2+t^2");
  }

  TEST_CASE("phi-expansion reassembles") {
    const auto k = GroundField::rational_padic(2);
    const Poly f = parse_poly(k, "x^7+3x^5-x^2+9");
    const Poly phi = parse_poly(k, "x^2+x+1");
    const auto c = phi_expand(f, phi);
    CHECK(c.size() == 4);
    for (const auto& a : c) CHECK(a.degree() < 2);
    CHECK(phi_reassemble(c, phi) == f);
  }

  TEST_CASE("division with remainder") {
    const auto k = GroundField::fp_rational_functions(5, 0);
    const Poly f = parse_poly(k, "x^5-x+t");
    const Poly d = parse_poly(k, "x-t");
    const auto [q, r] = f.divmod(d);
    CHECK(q * d + r == f);
    CHECK(r.degree() <= 0);
    CHECK(r == Poly::constant(f.eval(k.t())));
  }
}
