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
#ifndef MACLANE_POLY_HPP
#define MACLANE_POLY_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "maclane/ground_field.hpp"

namespace maclane {

/// Dense polynomial in x over a ground field, coefficients low to high.
/// The leading stored coefficient is nonzero; the zero polynomial has no
/// coefficients.
class Poly {
 public:
  explicit Poly(std::uint32_t characteristic = 0) : p_(characteristic) {}
  Poly(std::vector<FieldElement> coeffs, std::uint32_t characteristic);

  static Poly constant(const FieldElement& c);
  /// c * x^k.
  static Poly monomial(const FieldElement& c, std::size_t k);
  static Poly x(std::uint32_t characteristic);
  /// x - a.
  static Poly x_minus(const FieldElement& a);

  std::uint32_t characteristic() const noexcept { return p_; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  /// -1 for zero.
  std::int64_t degree() const noexcept { return static_cast<std::int64_t>(c_.size()) - 1; }
  const std::vector<FieldElement>& coeffs() const noexcept { return c_; }
  /// Zero beyond the degree.
  FieldElement coeff(std::size_t i) const;
  const FieldElement& leading() const;
  bool is_monic() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scaled(const FieldElement& c) const;
  /// Multiply by x^k.
  Poly shifted(std::size_t k) const;
  Poly pow(std::uint64_t k) const;
  Poly monic() const;

  std::pair<Poly, Poly> divmod(const Poly& divisor) const;
  FieldElement eval(const FieldElement& a) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

  /// Text in the polynomial grammar; parse_poly(K, to_string(K)) == *this.
  std::string to_string(const GroundField& k) const;

 private:
  void trim();

  std::uint32_t p_;
  std::vector<FieldElement> c_;
};

/// Coefficients a_0, a_1, ... of f = sum a_i phi^i, deg a_i < deg phi.
/// The zero polynomial expands to the empty list.
std::vector<Poly> phi_expand(const Poly& f, const Poly& phi);
/// Sum a_i phi^i.
Poly phi_reassemble(const std::vector<Poly>& coeffs, const Poly& phi);

/// Grammar (whitespace ignored):
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/')? factor)*
///   factor := ('+'|'-') factor | atom ('^' ['-'|'+'] digits)?
///   atom   := digits | 'x' | 't' | 'u' | '(' expr ')'
/// 'x' is the polynomial variable. Over FpT 'u' is the uniformizer
/// t^(1/p^m) and 't' means u^(p^m); over QtRank2 only 't' is allowed.
/// Division and negative powers need a divisor free of x.
Poly parse_poly(const GroundField& k, std::string_view text);
/// Same grammar without 'x'.
FieldElement parse_element(const GroundField& k, std::string_view text);

}  // namespace maclane

#endif
