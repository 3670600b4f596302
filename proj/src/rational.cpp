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
#include "maclane/rational.hpp"

#include <cctype>

#include "maclane/error.hpp"

namespace maclane {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  s = trim(s);
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size())
    fail(ErrorCode::Parse, "malformed rational '" + std::string(whole) + "'");
  for (std::size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      fail(ErrorCode::Parse, "malformed rational '" + std::string(whole) + "'");
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return BigInt(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  BigInt num = parse_integer(text.substr(0, slash), text);
  BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) fail(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }
std::string to_string(const BigInt& z) { return z.get_str(10); }

std::int64_t ord_p(const BigInt& z, std::uint32_t p) {
  require(z != 0, ErrorCode::Domain, "ord_p of zero");
  BigInt r = abs(z);
  std::int64_t k = 0;
  const BigInt pp(p);
  while (mpz_divisible_p(r.get_mpz_t(), pp.get_mpz_t())) {
    r /= pp;
    ++k;
  }
  return k;
}

std::int64_t ord_p(const Rational& q, std::uint32_t p) {
  return ord_p(q.get_num(), p) - ord_p(q.get_den(), p);
}

Rational reduce_mod(const Rational& q, std::uint32_t p) {
  const BigInt pp(p);
  BigInt den_inv;
  if (mpz_invert(den_inv.get_mpz_t(), q.get_den_mpz_t(), pp.get_mpz_t()) == 0)
    fail(ErrorCode::Domain, "denominator " + to_string(BigInt(q.get_den())) +
                                " is not invertible mod " + std::to_string(p));
  BigInt r = (q.get_num() * den_inv) % pp;
  if (r < 0) r += pp;
  return Rational(r);
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace maclane
