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
#include <filesystem>

#include "doctest.h"
#include "maclane/defect.hpp"
#include "maclane/fixtures.hpp"
#include "maclane/limits.hpp"
#include "maclane/scenarios.hpp"
#include "maclane/serialize.hpp"

using namespace maclane;

namespace {

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

Json rank_two_doc() { return builtin_document("rank-two-qt"); }

}  // namespace

TEST_SUITE("limits") {
  TEST_CASE("digit data for p = 5") {
    const DigitData d = gaussian_digit_data(5, 8);
    CHECK(d.leading == 2);
    const std::vector<std::uint64_t> pos{0, 1, 2, 3, 4, 5, 6, 7, 9};
    CHECK(d.positions == pos);
    CHECK(d.truncations[3] == 57);
    CHECK(d.truncations[8] == 280182);
    CHECK_THROWS_AS(gaussian_digit_data(7, 3), Error);
  }

  TEST_CASE("square root series") {
    const auto c = sqrt_series_coefficients(4);
    CHECK(c[0] == 1);
    CHECK(c[1] == Rational(-1, 8));
    CHECK(c[2] == Rational(1, 16));
  }

  TEST_CASE("stability probes") {
    const Scenario sc = builtin_scenario("rank-two-qt");
    const auto& fam = *std::get<LimitStep>(sc.chain.steps()[1]).family;
    const auto& k = sc.chain.field();
    const auto lin = probe_stability(fam, parse_poly(k, "x+1"));
    CHECK(lin.stable);
    CHECK(lin.evidence == "window(2)");
    const auto phi = probe_stability(fam, parse_poly(k, "x^2+4"));
    CHECK_FALSE(phi.stable);
    CHECK_THROWS_AS(probe_stability(fam, parse_poly(k, "x"), 1), Error);
    CHECK_THROWS_AS(probe_stability(fam, parse_poly(k, "x"), 40), Error);
  }

  TEST_CASE("family descriptor errors carry pointers") {
    const Scenario sc = builtin_scenario("rank-two-qt");
    const Valuation base = sc.chain.prefix(1);
    CHECK(starts_with(message_of([&] { make_family(base, Json{{"family", "nope"}, {"p", 5}}, "/f"); }), "/f/family"));
    CHECK(starts_with(message_of([&] { make_family(base, Json{{"family", "gaussian_digits"}, {"p", 3}}, "/f"); }),
                      "/f/p"));
    CHECK(starts_with(message_of([&] {
                        make_family(base, Json{{"family", "gaussian_digits"}, {"p", 5}, {"horizon", 0}}, "/f");
                      }),
                      "/f/horizon"));
  }

  TEST_CASE("limit augmentation rejects a gamma below the family") {
    Json doc = rank_two_doc();
    doc["chain"][1]["gamma"] = Json::array({"0", "3"});
    const std::string m = message_of([&] { load_scenario(doc); });
    CHECK(starts_with(m, "/chain/1"));
    CHECK(m.find("monotonicity") != std::string::npos);
  }
}

TEST_SUITE("defect") {
  TEST_CASE("mis-normalized chain has a non-integral inertia quotient") {
    const Fixture fx = misnormalized_fixture();
    const std::size_t last = fx.mu.steps().size() - 1;
    try {
      (void)inertia_of_step(fx.mu, last);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Domain);
      CHECK(std::string(e.what()).find("normalized") != std::string::npos);
    }
  }

  TEST_CASE("inertia two on an ordinary step") {
    for (const auto& fx : ordinary_fixtures()) {
      if (fx.name != "Q3/inertia") continue;
      const auto r = defect_of_step(fx.mu, 1);
      CHECK_FALSE(r.limit);
      CHECK(r.d == 1);
      CHECK(r.f == 2);
      const DefectReport all = defect_formula(fx.mu, true);
      CHECK(all.f_total == 2);
      CHECK(all.efd == 2);
    }
  }

  TEST_CASE("defect of the builtin chains") {
    const DefectReport c1 = defect_formula(builtin_scenario("artin-schreier-1", Json{{"p", 3}}).chain);
    CHECK(c1.d_total == 3);
    CHECK(c1.efd == 3);
    CHECK(c1.hensel_product == 3);
    const Scenario c2 = builtin_scenario("artin-schreier-2");
    const DefectReport r2 = defect_formula(c2.chain);
    CHECK(r2.d_total == 1);
    CHECK(r2.hensel_product == 5);
    REQUIRE(r2.steps.size() == 1);
    CHECK(r2.steps[0].stabilization_index == std::optional<std::size_t>(0));
    const DefectReport r3 = defect_formula(builtin_scenario("rank-two-qt").chain);
    CHECK(r3.steps.size() == 2);
    CHECK(r3.efd == 1);
  }

  TEST_CASE("efd sum reports the difference") {
    DefectReport r;
    r.efd = 2;
    const EfdSum bad = efd_sum_check({r}, 3);
    CHECK_FALSE(bad.holds);
    CHECK_FALSE(bad.diff.empty());
    CHECK(efd_sum_check({r, r}, 4).holds);
  }
}

TEST_SUITE("scenarios") {
  TEST_CASE("builtins round-trip byte for byte") {
    for (const auto& b : builtin_scenarios()) {
      const std::string once = save_scenario(builtin_scenario(b.name));
      const std::string twice = save_scenario(load_scenario(parse_json_text(once, "t")));
      CHECK(once == twice);
    }
  }

  TEST_CASE("table form round-trips") {
    const Json doc = parse_json_text(R"({
      "schema": 1, "name": "table",
      "field": {"kind": "QtRank2", "p": 5},
      "chain": [
        {"type": "depth0", "a": "0", "gamma": ["0", "0"]},
        {"type": "limit", "family": {"points": [["x-4", ["0", "1"]], ["x-14", ["0", "2"]], ["x-114", ["0", "3"]]],
                                     "certificates": {"x": 0}},
         "phi": "x^2+4", "gamma": ["1", "0"], "key": "certified"}
      ]})",
                                     "t");
    const Scenario s = load_scenario(doc);
    const std::string once = save_scenario(s);
    CHECK(once == save_scenario(load_scenario(parse_json_text(once, "t"))));
    CHECK(once.find("\"points\"") != std::string::npos);
  }

  TEST_CASE("load errors name the offending pointer") {
    Json doc = rank_two_doc();
    doc["chain"][1]["family"]["family"] = "bogus";
    CHECK(starts_with(message_of([&] { load_scenario(doc); }), "/chain/1/family/family"));

    Json c1 = builtin_document("artin-schreier-1");
    c1["field"]["prec"] = 2;
    const std::string m = message_of([&] { load_scenario(c1); });
    CHECK(starts_with(m, "/chain/1/family/horizon"));
    CHECK(m.find("precision insufficient") != std::string::npos);

    Json bad_schema = rank_two_doc();
    bad_schema["schema"] = 9;
    CHECK(starts_with(message_of([&] { load_scenario(bad_schema); }), "/schema"));

    Json after_inf = rank_two_doc();
    after_inf["chain"].push_back(after_inf["chain"][2]);
    CHECK(message_of([&] { load_scenario(after_inf); }).find("monotonicity") != std::string::npos);
  }

  TEST_CASE("run writes the bundle") {
    const ScenarioRun run = run_scenario(builtin_scenario("rank-two-qt"));
    CHECK(run.all_ok);
    CHECK(run.report["ok"] == true);
    CHECK_FALSE(run.svgs.empty());
    const auto dir = std::filesystem::temp_directory_path() / "maclane_unit_run";
    std::filesystem::remove_all(dir);
    write_run(run, dir.string());
    CHECK(std::filesystem::exists(dir / "report.json"));
    CHECK(std::filesystem::exists(dir / "chain.txt"));
    CHECK(run_scenario(builtin_scenario("rank-two-qt")).report.dump() == run.report.dump());
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("declared facts that fail are reported") {
    Json doc = rank_two_doc();
    doc["facts"]["d"] = 2;
    const ScenarioRun run = run_scenario(load_scenario(doc));
    CHECK_FALSE(run.all_ok);
  }
}
