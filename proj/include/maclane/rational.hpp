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
#ifndef MACLANE_RATIONAL_HPP
#define MACLANE_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace maclane {

using BigInt = mpz_class;
using Rational = mpq_class;

// Accepts "n", "-n", "n/d" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

// p-adic order of a nonzero integer / rational, by stripping factors of p.
std::int64_t ord_p(const BigInt& z, std::uint32_t p);
std::int64_t ord_p(const Rational& q, std::uint32_t p);

// Canonical representative in [0, p) of q mod p; q's denominator must be
// prime to p.
Rational reduce_mod(const Rational& q, std::uint32_t p);

BigInt lcm(const BigInt& a, const BigInt& b);

}  // namespace maclane

#endif
