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
#include "maclane/fixtures.hpp"

#include "maclane/serialize.hpp"

namespace maclane {

namespace {

const char* kQ2 = R"("field":{"kind":"Qp","p":2})";
const char* kF3 = R"("field":{"kind":"FpT","p":3,"prec":1})";
const char* kQt5 = R"("field":{"kind":"QtRank2","p":5})";

Fixture make(const std::string& name, const char* field, const std::string& chain) {
  return {name, chain_from_text(std::string("{") + field + ",\"chain\":[" + chain + "]}")};
}

}  // namespace

Valuation chain_from_text(const std::string& json) {
  return chain_file_from_json(parse_json_text(json, "chain"));
}

std::vector<Fixture> standard_fixtures() {
  return {
      make("Q2/gauss", kQ2, R"({"type":"depth0","a":"0","gamma":["0"]})"),
      make("Q2/x-half", kQ2, R"({"type":"depth0","a":"0","gamma":["1/2"]})"),
      make("Q2/quadratic", kQ2,
           R"({"type":"depth0","a":"0","gamma":["0"]},{"type":"ordinary","phi":"x^2+x+1","gamma":["3/2"]})"),
      make("F3/gauss", kF3, R"({"type":"depth0","a":"0","gamma":["0"]})"),
      make("F3/x-third", kF3, R"({"type":"depth0","a":"0","gamma":["1/3"]})"),
      make("F3/quadratic", kF3,
           R"({"type":"depth0","a":"0","gamma":["0"]},{"type":"ordinary","phi":"x^2+1","gamma":["3/2"]})"),
      make("Qt5/mu0", kQt5, R"({"type":"depth0","a":"0","gamma":["0","0"]})"),
      make("Qt5/rho2", kQt5,
           R"({"type":"depth0","a":"0","gamma":["0","0"]},{"type":"ordinary","phi":"x-14","gamma":["0","2"]})"),
      make("Qt5/mu1", kQt5,
           R"({"type":"depth0","a":"0","gamma":["0","0"]},)"
           R"({"type":"limit","family":{"family":"gaussian_digits","p":5,"horizon":8},"phi":"x^2+4","gamma":["1","0"],"key":"certified"})"),
  };
}

std::vector<Fixture> ordinary_fixtures() {
  auto all = standard_fixtures();
  std::vector<Fixture> out;
  for (auto& f : all)
    if (f.mu.steps().size() >= 2 && !is_limit(f.mu.steps().back())) out.push_back(std::move(f));
  out.push_back(make("Q3/inertia", R"("field":{"kind":"Qp","p":3})",
                     R"({"type":"depth0","a":"0","gamma":["0"]},{"type":"ordinary","phi":"x^2+1","gamma":["1"]})"));
  return out;
}

Fixture misnormalized_fixture() {
  return make("Q2/misnormalized", kQ2,
              R"({"type":"depth0","a":"0","gamma":["1/3"]},{"type":"ordinary","phi":"x^2","gamma":["1"],"key":"certified"})");
}

}  // namespace maclane
