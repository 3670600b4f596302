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
#include "maclane/ground_field.hpp"

#include <algorithm>

#include "maclane/error.hpp"

namespace maclane {

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
  require(num_.characteristic() == den_.characteristic(), ErrorCode::InvalidArgument,
          "numerator and denominator of different characteristic");
  require(!den_.is_zero(), ErrorCode::Domain, "division by zero in field element");
  normalize();
}

void FieldElement::normalize() {
  const auto p = num_.characteristic();
  if (num_.is_zero()) {
    den_ = UPoly::constant(1, p);
    return;
  }
  if (den_.is_monomial()) {
    // Laurent case: the gcd is a power of T.
    const auto k = std::min(den_.low_order(), num_.low_order());
    num_ = num_.shifted_down(k);
    den_ = den_.shifted_down(k);
  } else {
    UPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divmod(g).first;
      den_ = den_.divmod(g).first;
    }
  }
  const Rational lead = den_.leading();
  if (lead != 1) {
    const Rational inv = p == 0 ? Rational(1) / lead : reduce_mod(Rational(1) / lead, p);
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

FieldElement FieldElement::from_rational(const Rational& q, std::uint32_t characteristic) {
  if (characteristic != 0 && q.get_den() % characteristic == 0)
    fail(ErrorCode::Domain, "rational " + maclane::to_string(q) + " has no image in characteristic " +
                                std::to_string(characteristic));
  FieldElement r(characteristic);
  r.num_ = UPoly::constant(q, characteristic);
  return r;
}

FieldElement FieldElement::generator(std::uint32_t characteristic) {
  return generator_power(1, characteristic);
}

FieldElement FieldElement::generator_power(std::int64_t k, std::uint32_t characteristic) {
  FieldElement r(characteristic);
  const auto e = static_cast<std::uint64_t>(k < 0 ? -k : k);
  if (k >= 0) {
    r.num_ = UPoly::monomial(1, e, characteristic);
  } else {
    r.num_ = UPoly::constant(1, characteristic);
    r.den_ = UPoly::monomial(1, e, characteristic);
  }
  return r;
}

Rational FieldElement::constant_value() const {
  require(is_constant(), ErrorCode::Domain, "element is not a constant");
  if (num_.is_zero()) return Rational(0);
  return num_.lowest() / den_.lowest();
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  if (den_ == o.den_) return FieldElement(num_ + o.num_, den_);
  return FieldElement(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FieldElement FieldElement::operator-() const {
  FieldElement r(*this);
  r.num_ = -num_;
  return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator*(const FieldElement& o) const {
  if (is_zero()) return *this;
  if (o.is_zero()) return o;
  return FieldElement(num_ * o.num_, den_ * o.den_);
}

FieldElement FieldElement::inverse() const {
  require(!is_zero(), ErrorCode::Domain, "inverse of zero");
  return FieldElement(den_, num_);
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }

FieldElement FieldElement::pow(std::int64_t k) const {
  if (k < 0) return inverse().pow(-k);
  FieldElement result = FieldElement::from_rational(1, characteristic());
  FieldElement base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

FieldElement FieldElement::power_substituted(std::uint64_t k) const {
  return FieldElement(num_.power_substituted(k), den_.power_substituted(k));
}

std::string FieldElement::to_string(const std::string& var) const {
  const std::string n = num_.to_string(var);
  if (den_.is_constant()) return n;  // den is monic, so 1
  auto wrap = [](const std::string& s, bool simple) { return simple ? s : "(" + s + ")"; };
  const bool n_simple = num_.terms().size() <= 1 && n.find('/') == std::string::npos &&
                        n.find('*') == std::string::npos && n.find('-', 1) == std::string::npos;
  const bool d_simple = den_.is_monomial() && den_.leading() == 1;
  return wrap(n, n_simple) + "/" + wrap(den_.to_string(var), d_simple);
}

// ---------------------------------------------------------------------------
// GroundField

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t checked_power(std::uint32_t p, std::uint32_t m) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    require(r <= (std::uint64_t{1} << 40) / p, ErrorCode::InvalidArgument, "precision too large");
    r *= p;
  }
  return r;
}

}  // namespace

GroundField::GroundField(FieldKind kind, std::uint32_t p, std::uint32_t precision)
    : kind_(kind), p_(p), precision_(precision), group_(1) {
  require(is_prime(p), ErrorCode::InvalidArgument, std::to_string(p) + " is not a prime");
  switch (kind) {
    case FieldKind::Qp:
      group_ = Subgroup(1, {GroupElement::scalar(1)});
      break;
    case FieldKind::FpT: {
      Rational step(1);
      step /= Rational(BigInt(std::to_string(checked_power(p, precision))));
      group_ = Subgroup(1, {GroupElement::scalar(step)});
      break;
    }
    case FieldKind::QtRank2:
      group_ = Subgroup(2, {GroupElement::unit(2, 0), GroupElement::unit(2, 1)});
      break;
  }
}

GroundField GroundField::rational_padic(std::uint32_t p) { return GroundField(FieldKind::Qp, p, 0); }

GroundField GroundField::fp_rational_functions(std::uint32_t p, std::uint32_t precision) {
  return GroundField(FieldKind::FpT, p, precision);
}

GroundField GroundField::qt_rank_two(std::uint32_t p) { return GroundField(FieldKind::QtRank2, p, 0); }

GroundField GroundField::with_value_group(Subgroup group) const {
  require(group.rank() == rank(), ErrorCode::InvalidArgument, "ground group rank mismatch");
  GroundField k(*this);
  k.group_ = std::move(group);
  return k;
}

std::string GroundField::generator_name() const {
  switch (kind_) {
    case FieldKind::FpT: return "u";
    case FieldKind::QtRank2: return "t";
    default: return "";
  }
}

std::uint64_t GroundField::t_exponent() const {
  require(kind_ == FieldKind::FpT, ErrorCode::InvalidArgument, "t_exponent is only defined for FpT");
  return checked_power(p_, precision_);
}

FieldElement GroundField::from_rational(const Rational& q) const {
  return FieldElement::from_rational(q, characteristic());
}

FieldElement GroundField::generator() const {
  require(kind_ != FieldKind::Qp, ErrorCode::InvalidArgument, "Q has no transcendental generator");
  return FieldElement::generator(characteristic());
}

FieldElement GroundField::t() const {
  if (kind_ == FieldKind::FpT)
    return FieldElement::generator_power(static_cast<std::int64_t>(t_exponent()), p_);
  return generator();
}

void GroundField::check(const FieldElement& a) const {
  require(a.characteristic() == characteristic(), ErrorCode::InvalidArgument,
          "element of characteristic " + std::to_string(a.characteristic()) + " used in " + describe());
  if (kind_ == FieldKind::Qp)
    require(a.is_constant(), ErrorCode::InvalidArgument, "elements of Q cannot involve a transcendental");
}

GroupElement GroundField::value(const FieldElement& a) const {
  check(a);
  if (a.is_zero()) return GroupElement::infinity();
  switch (kind_) {
    case FieldKind::Qp:
      return GroupElement::scalar(Rational(static_cast<long>(ord_p(a.constant_value(), p_))));
    case FieldKind::FpT: {
      const auto k = static_cast<std::int64_t>(a.numerator().low_order()) -
                     static_cast<std::int64_t>(a.denominator().low_order());
      Rational q(static_cast<long>(k));
      q /= Rational(BigInt(std::to_string(t_exponent())));
      return GroupElement::scalar(q);
    }
    case FieldKind::QtRank2: {
      const auto k = static_cast<std::int64_t>(a.numerator().low_order()) -
                     static_cast<std::int64_t>(a.denominator().low_order());
      const Rational initial = a.numerator().lowest() / a.denominator().lowest();
      return GroupElement({Rational(static_cast<long>(k)), Rational(static_cast<long>(ord_p(initial, p_)))});
    }
  }
  fail(ErrorCode::Internal, "unknown field kind");
}

GroundField GroundField::lift_precision(std::uint32_t new_precision) const {
  require(kind_ == FieldKind::FpT, ErrorCode::InvalidArgument, "lift_precision needs an FpT field");
  require(new_precision >= precision_, ErrorCode::InvalidArgument,
          "cannot lower precision from " + std::to_string(precision_) + " to " + std::to_string(new_precision));
  return GroundField(FieldKind::FpT, p_, new_precision);
}

FieldElement GroundField::reexpress(const FieldElement& a, const GroundField& from) const {
  require(kind_ == FieldKind::FpT && from.kind_ == FieldKind::FpT && from.p_ == p_,
          ErrorCode::InvalidArgument, "reexpress needs two FpT fields over the same prime");
  require(precision_ >= from.precision_, ErrorCode::InvalidArgument, "target precision is coarser");
  from.check(a);
  return a.power_substituted(t_exponent() / from.t_exponent());
}

std::string GroundField::describe() const {
  const std::string p = std::to_string(p_);
  switch (kind_) {
    case FieldKind::Qp: return "Q, ord_" + p;
    case FieldKind::FpT:
      return "F_" + p + "(t^(1/" + p + "^" + std::to_string(precision_) + ")), t-adic";
    case FieldKind::QtRank2: return "Q(t), (ord_t, ord_" + p + " of initial coefficient)";
  }
  return "?";
}

}  // namespace maclane
