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
#ifndef MACLANE_GROUND_FIELD_HPP
#define MACLANE_GROUND_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "maclane/upoly.hpp"
#include "maclane/value_group.hpp"

namespace maclane {

/// Element of Q, Q(T) or F_p(T), stored as a reduced fraction num/den with
/// monic denominator, so equality is syntactic. Elements of Q are the
/// constant fractions of characteristic 0.
class FieldElement {
 public:
  explicit FieldElement(std::uint32_t characteristic = 0)
      : num_(characteristic), den_(UPoly::constant(1, characteristic)) {}
  FieldElement(UPoly num, UPoly den);

  static FieldElement from_rational(const Rational& q, std::uint32_t characteristic);
  /// The transcendental T itself.
  static FieldElement generator(std::uint32_t characteristic);
  /// T^k for any integer k.
  static FieldElement generator_power(std::int64_t k, std::uint32_t characteristic);

  std::uint32_t characteristic() const noexcept { return num_.characteristic(); }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
  /// Requires is_constant().
  Rational constant_value() const;
  const UPoly& numerator() const noexcept { return num_; }
  const UPoly& denominator() const noexcept { return den_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  FieldElement inverse() const;
  FieldElement pow(std::int64_t k) const;
  /// T -> T^k in numerator and denominator.
  FieldElement power_substituted(std::uint64_t k) const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Re-parseable text in the polynomial grammar, e.g. "(t^2+1)/(t-1)".
  std::string to_string(const std::string& var) const;

 private:
  void normalize();

  UPoly num_, den_;
};

enum class FieldKind { Qp, FpT, QtRank2 };

/// A computable valued field (K, v).
///
///  * Qp       : Q with the p-adic valuation, value group Z.
///  * FpT      : F_p(u), u = t^(1/p^m), t-adic valuation reported in t-units,
///               value group (1/p^m)Z. m is the precision.
///  * QtRank2  : Q(t) with v(a) = (ord_t a, ord_p in(a)) in Z^2 lex, where
///               in(a) = (a t^-ord_t(a))(0).
class GroundField {
 public:
  static GroundField rational_padic(std::uint32_t p);
  static GroundField fp_rational_functions(std::uint32_t p, std::uint32_t precision);
  static GroundField qt_rank_two(std::uint32_t p);

  FieldKind kind() const noexcept { return kind_; }
  std::uint32_t prime() const noexcept { return p_; }
  std::uint32_t precision() const noexcept { return precision_; }
  std::uint32_t characteristic() const noexcept { return kind_ == FieldKind::FpT ? p_ : 0; }
  std::size_t rank() const noexcept { return kind_ == FieldKind::QtRank2 ? 2 : 1; }
  /// The ground value group Gamma = vK, presented by generators.
  const Subgroup& value_group() const noexcept { return group_; }
  /// Replaces the presented ground group (scenario override).
  GroundField with_value_group(Subgroup group) const;
  /// Name of the transcendental in element strings: "u", "t", or "" for Q.
  std::string generator_name() const;
  /// For FpT: p^m, the exponent with u^(p^m) = t.
  std::uint64_t t_exponent() const;

  FieldElement zero() const { return FieldElement(characteristic()); }
  FieldElement one() const { return from_rational(1); }
  FieldElement from_rational(const Rational& q) const;
  /// u for FpT, t for QtRank2; Qp has no generator.
  FieldElement generator() const;
  /// The element t (equals u^(p^m) for FpT).
  FieldElement t() const;

  GroupElement value(const FieldElement& a) const;
  GroupElement zero_value() const { return GroupElement::zero(rank()); }

  /// Throws unless `a` is an element of this field.
  void check(const FieldElement& a) const;

  /// F_p(t^(1/p^m)) -> F_p(t^(1/p^m')), m' >= m.
  GroundField lift_precision(std::uint32_t new_precision) const;
  /// Re-expresses an element of the coarser field `from` in this field.
  FieldElement reexpress(const FieldElement& a, const GroundField& from) const;

  /// e.g. "Q, ord_5" or "F_2(t^(1/8)), t-adic".
  std::string describe() const;

  friend bool operator==(const GroundField& a, const GroundField& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_ && a.precision_ == b.precision_ && a.group_ == b.group_;
  }

 private:
  GroundField(FieldKind kind, std::uint32_t p, std::uint32_t precision);

  FieldKind kind_;
  std::uint32_t p_;
  std::uint32_t precision_;
  Subgroup group_;
};

using FieldPtr = std::shared_ptr<const GroundField>;

}  // namespace maclane

#endif
