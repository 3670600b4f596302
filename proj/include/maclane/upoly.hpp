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
#ifndef MACLANE_UPOLY_HPP
#define MACLANE_UPOLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "maclane/rational.hpp"

namespace maclane {

/// Sparse univariate polynomial in one transcendental T over Q
/// (characteristic 0) or F_p (characteristic p, coefficients kept in [0,p)).
///
/// Terms are stored by strictly increasing exponent with nonzero
/// coefficients, so equality is structural. Sparse storage matters here:
/// the Artin-Schreier scenarios build elements like sum t^(p^i).
class UPoly {
 public:
  using Term = std::pair<std::uint64_t, Rational>;

  explicit UPoly(std::uint32_t characteristic = 0) : p_(characteristic) {}

  static UPoly constant(const Rational& c, std::uint32_t characteristic);
  static UPoly monomial(const Rational& c, std::uint64_t exponent, std::uint32_t characteristic);

  std::uint32_t characteristic() const noexcept { return p_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  /// -1 for the zero polynomial.
  std::int64_t degree() const noexcept;
  /// Exponent of the lowest term; the polynomial must be nonzero.
  std::uint64_t low_order() const;
  const Rational& leading() const;
  const Rational& lowest() const;
  Rational coefficient(std::uint64_t exponent) const;
  const std::vector<Term>& terms() const noexcept { return terms_; }

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator-() const;
  UPoly operator*(const UPoly& o) const;
  UPoly scaled(const Rational& c) const;
  /// Multiply by T^k.
  UPoly shifted_up(std::uint64_t k) const;
  /// Divide by T^k; T^k must divide.
  UPoly shifted_down(std::uint64_t k) const;
  /// T -> T^k.
  UPoly power_substituted(std::uint64_t k) const;

  /// Euclidean division; divisor nonzero.
  std::pair<UPoly, UPoly> divmod(const UPoly& divisor) const;
  UPoly monic() const;

  friend bool operator==(const UPoly& a, const UPoly& b) {
    return a.p_ == b.p_ && a.terms_ == b.terms_;
  }

  /// Human-readable, e.g. "2*t^2-t+1/3".
  std::string to_string(const std::string& var) const;

 private:
  Rational normalize(const Rational& c) const;
  void push(std::uint64_t e, Rational c);  // e must exceed every stored exponent

  std::uint32_t p_ = 0;
  std::vector<Term> terms_;
};

/// Monic gcd (zero if both are zero).
UPoly gcd(UPoly a, UPoly b);

}  // namespace maclane

#endif
