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
#include "maclane/upoly.hpp"

#include <algorithm>

#include "maclane/error.hpp"

namespace maclane {

Rational UPoly::normalize(const Rational& c) const {
  return p_ == 0 ? c : reduce_mod(c, p_);
}

void UPoly::push(std::uint64_t e, Rational c) {
  c = normalize(c);
  if (c != 0) terms_.emplace_back(e, std::move(c));
}

UPoly UPoly::constant(const Rational& c, std::uint32_t characteristic) {
  return monomial(c, 0, characteristic);
}

UPoly UPoly::monomial(const Rational& c, std::uint64_t exponent, std::uint32_t characteristic) {
  UPoly r(characteristic);
  r.push(exponent, c);
  return r;
}

bool UPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

std::int64_t UPoly::degree() const noexcept {
  return terms_.empty() ? -1 : static_cast<std::int64_t>(terms_.back().first);
}

std::uint64_t UPoly::low_order() const {
  require(!terms_.empty(), ErrorCode::Domain, "order of the zero polynomial");
  return terms_.front().first;
}

const Rational& UPoly::leading() const {
  require(!terms_.empty(), ErrorCode::Domain, "leading coefficient of zero");
  return terms_.back().second;
}

const Rational& UPoly::lowest() const {
  require(!terms_.empty(), ErrorCode::Domain, "lowest coefficient of zero");
  return terms_.front().second;
}

Rational UPoly::coefficient(std::uint64_t exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, std::uint64_t e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return Rational(0);
}

static void check_char(const UPoly& a, const UPoly& b) {
  if (a.characteristic() != b.characteristic())
    fail(ErrorCode::InvalidArgument, "mixing characteristics " + std::to_string(a.characteristic()) +
                                         " and " + std::to_string(b.characteristic()));
}

UPoly UPoly::operator+(const UPoly& o) const {
  check_char(*this, o);
  UPoly r(p_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
      r.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      r.push(terms_[i].first, terms_[i].second + o.terms_[j].second);
      ++i;
      ++j;
    }
  }
  return r;
}

UPoly UPoly::operator-() const {
  UPoly r(p_);
  for (const auto& [e, c] : terms_) r.push(e, -c);
  return r;
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
  check_char(*this, o);
  UPoly r(p_);
  if (is_zero() || o.is_zero()) return r;
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) prod.emplace_back(e1 + e2, c1 * c2);
  std::sort(prod.begin(), prod.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < prod.size();) {
    Rational acc = prod[i].second;
    std::size_t j = i + 1;
    for (; j < prod.size() && prod[j].first == prod[i].first; ++j) acc += prod[j].second;
    r.push(prod[i].first, acc);
    i = j;
  }
  return r;
}

UPoly UPoly::scaled(const Rational& c) const {
  UPoly r(p_);
  for (const auto& [e, x] : terms_) r.push(e, x * c);
  return r;
}

UPoly UPoly::shifted_up(std::uint64_t k) const {
  UPoly r(*this);
  for (auto& t : r.terms_) t.first += k;
  return r;
}

UPoly UPoly::shifted_down(std::uint64_t k) const {
  require(is_zero() || low_order() >= k, ErrorCode::Domain, "shift below T^0");
  UPoly r(*this);
  for (auto& t : r.terms_) t.first -= k;
  return r;
}

UPoly UPoly::power_substituted(std::uint64_t k) const {
  require(k >= 1, ErrorCode::InvalidArgument, "substitution exponent must be >= 1");
  UPoly r(*this);
  for (auto& t : r.terms_) t.first *= k;
  return r;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& divisor) const {
  check_char(*this, divisor);
  require(!divisor.is_zero(), ErrorCode::Domain, "division by the zero polynomial");
  UPoly q(p_), r(*this);
  const auto dd = divisor.degree();
  const Rational lead_inv = normalize(Rational(1) / divisor.leading());
  std::vector<Term> qterms;
  while (!r.is_zero() && r.degree() >= dd) {
    const std::uint64_t e = static_cast<std::uint64_t>(r.degree() - dd);
    const Rational c = normalize(r.leading() * lead_inv);
    qterms.emplace_back(e, c);
    r = r - divisor.scaled(c).shifted_up(e);
  }
  std::reverse(qterms.begin(), qterms.end());
  for (auto& [e, c] : qterms) q.push(e, c);
  return {q, r};
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(normalize(Rational(1) / leading()));
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string UPoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    const bool neg = c < 0;
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? "-" : "+";
    }
    if (e == 0) {
      s += maclane::to_string(mag);
      continue;
    }
    if (mag != 1) s += maclane::to_string(mag) + "*";
    s += var;
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace maclane
