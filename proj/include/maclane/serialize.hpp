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
#ifndef MACLANE_SERIALIZE_HPP
#define MACLANE_SERIALIZE_HPP

#include <string>

#include "json.hpp"
#include "maclane/error.hpp"
#include "maclane/newton.hpp"
#include "maclane/valuation.hpp"

namespace maclane {

using Json = nlohmann::ordered_json;

/// Throws with the message prefixed by a JSON pointer.
[[noreturn]] void fail_at(const std::string& pointer, ErrorCode code, const std::string& what);
/// Re-throws maclane errors raised while handling `pointer` with the pointer
/// prepended (once).
template <class F>
auto at_pointer(const std::string& pointer, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    const std::string w = e.what();
    if (!w.empty() && w[0] == '/') throw;
    fail_at(pointer, e.code(), w);
  }
}

inline bool is_uint(const Json& j) { return j.is_number_integer() && j.get<std::int64_t>() >= 0; }

const Json& member(const Json& obj, const std::string& key, const std::string& pointer);
std::string string_member(const Json& obj, const std::string& key, const std::string& pointer);
std::uint64_t uint_member(const Json& obj, const std::string& key, const std::string& pointer);

Json to_json(const Rational& q);
Json to_json(const GroupElement& g);
GroupElement group_from_json(const Json& j, std::size_t rank, const std::string& pointer);

Json field_to_json(const GroundField& k);
FieldPtr field_from_json(const Json& j, const std::string& pointer);

/// Step list of a chain.
Json chain_to_json(const Valuation& mu);
/// Rebuilds a chain, validating monotonicity and key screens step by step.
Valuation chain_from_json(const FieldPtr& k, const Json& steps, const std::string& pointer);

/// {"field":...,"chain":[...]}
Json chain_file_to_json(const Valuation& mu);
Valuation chain_file_from_json(const Json& j);

/// {"vertices":[[n,alpha],...],"sides":[{"slope":...,"length":...}]}
Json polygon_to_json(const NewtonPolygon& n);

Json parse_json_text(const std::string& text, const std::string& what);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace maclane

#endif
