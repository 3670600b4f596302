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
#include "maclane/value_group.hpp"

using namespace maclane;

namespace {

GroupElement g2(long a, long b) { return GroupElement({Rational(a), Rational(b)}); }

}  // namespace

TEST_SUITE("value_group") {
  TEST_CASE("lexicographic order with infinity on top") {
    CHECK(g2(0, 5) < g2(1, -3));
    CHECK(g2(1, -3) < g2(1, 0));
    CHECK(g2(7, 7) < GroupElement::infinity());
    CHECK(GroupElement::infinity() == GroupElement::infinity());
    CHECK((g2(1, 2) + GroupElement::infinity()).is_infinite());
  }

  TEST_CASE("arithmetic and printing") {
    CHECK((g2(1, 2) - g2(1, 5)) == g2(0, -3));
    CHECK(g2(1, 0).to_string() == "(1,0)");
    CHECK(GroupElement::scalar(Rational(3, 2)).to_string() == "(3/2)");
    CHECK(GroupElement::infinity().to_string() == "inf");
    CHECK((3 * g2(1, -1)) == g2(3, -3));
  }

  TEST_CASE("rank mismatch is an error") {
    CHECK_THROWS_AS((void)(g2(0, 0) < GroupElement::scalar(Rational(1))), Error);
  }

  TEST_CASE("subgroup membership and index") {
    const Subgroup z(1, {GroupElement::scalar(Rational(1))});
    const Subgroup half = z.join(GroupElement::scalar(Rational(1, 2)));
    CHECK(half.contains(GroupElement::scalar(Rational(-3, 2))));
    CHECK_FALSE(z.contains(GroupElement::scalar(Rational(1, 2))));
    REQUIRE(half.index_of(z).has_value());
    CHECK(*half.index_of(z) == 2);
    CHECK_FALSE(z.index_of(half).has_value());

    // Z^2 inside <(1/2,0),(1/3,1/5)>: index 2*3*5 / gcd structure.
    const Subgroup z2(2, {g2(1, 0), g2(0, 1)});
    const Subgroup big = z2.join(std::vector<GroupElement>{GroupElement({Rational(1, 2), Rational(0)}),
                                                          GroupElement({Rational(1, 3), Rational(1, 5)})});
    REQUIRE(big.index_of(z2).has_value());
    CHECK(*big.index_of(z2) == 30);
    CHECK(big.dimension() == 2);
  }

  TEST_CASE("rank-one subgroup of Q^2 has infinite index in Z^2") {
    const Subgroup line(2, {g2(1, 0)});
    const Subgroup z2(2, {g2(1, 0), g2(0, 1)});
    CHECK_FALSE(z2.index_of(line).has_value());
    CHECK(z2.contains(line));
  }
}
