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
#include "maclane/poly.hpp"

#include <cctype>

#include "maclane/error.hpp"

namespace maclane {

Poly::Poly(std::vector<FieldElement> coeffs, std::uint32_t characteristic)
    : p_(characteristic), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    require(c.characteristic() == p_, ErrorCode::InvalidArgument, "coefficient characteristic mismatch");
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const FieldElement& c) { return monomial(c, 0); }

Poly Poly::monomial(const FieldElement& c, std::size_t k) {
  Poly r(c.characteristic());
  if (c.is_zero()) return r;
  r.c_.assign(k + 1, FieldElement(c.characteristic()));
  r.c_[k] = c;
  return r;
}

Poly Poly::x(std::uint32_t characteristic) {
  return monomial(FieldElement::from_rational(1, characteristic), 1);
}

Poly Poly::x_minus(const FieldElement& a) { return x(a.characteristic()) - constant(a); }

FieldElement Poly::coeff(std::size_t i) const {
  return i < c_.size() ? c_[i] : FieldElement(p_);
}

const FieldElement& Poly::leading() const {
  require(!c_.empty(), ErrorCode::Domain, "leading coefficient of the zero polynomial");
  return c_.back();
}

bool Poly::is_monic() const {
  return !c_.empty() && c_.back() == FieldElement::from_rational(1, p_);
}

Poly Poly::operator+(const Poly& o) const {
  require(p_ == o.p_, ErrorCode::InvalidArgument, "polynomials of different characteristic");
  Poly r(p_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), FieldElement(p_));
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    if (i < c_.size() && i < o.c_.size())
      r.c_[i] = c_[i] + o.c_[i];
    else
      r.c_[i] = i < c_.size() ? c_[i] : o.c_[i];
  }
  r.trim();
  return r;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  require(p_ == o.p_, ErrorCode::InvalidArgument, "polynomials of different characteristic");
  Poly r(p_);
  if (is_zero() || o.is_zero()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, FieldElement(p_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      if (!o.c_[j].is_zero()) r.c_[i + j] += c_[i] * o.c_[j];
  }
  r.trim();
  return r;
}

Poly Poly::scaled(const FieldElement& c) const {
  Poly r(p_);
  if (c.is_zero()) return r;
  r.c_.reserve(c_.size());
  for (const auto& a : c_) r.c_.push_back(a * c);
  return r;
}

Poly Poly::shifted(std::size_t k) const {
  if (is_zero()) return *this;
  Poly r(p_);
  r.c_.assign(k, FieldElement(p_));
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Poly Poly::pow(std::uint64_t k) const {
  Poly result = constant(FieldElement::from_rational(1, p_));
  Poly base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inverse());
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  require(p_ == divisor.p_, ErrorCode::InvalidArgument, "polynomials of different characteristic");
  require(!divisor.is_zero(), ErrorCode::Domain, "division by the zero polynomial");
  const std::size_t dd = divisor.c_.size() - 1;
  if (c_.size() <= dd) return {Poly(p_), *this};
  const bool monic_divisor = divisor.is_monic();
  const FieldElement inv = monic_divisor ? FieldElement::from_rational(1, p_) : divisor.leading().inverse();
  std::vector<FieldElement> rem(c_);
  std::vector<FieldElement> quo(c_.size() - dd, FieldElement(p_));
  for (std::size_t k = c_.size(); k-- > dd;) {
    if (rem[k].is_zero()) continue;
    const FieldElement q = monic_divisor ? rem[k] : rem[k] * inv;
    quo[k - dd] = q;
    for (std::size_t j = 0; j <= dd; ++j)
      if (!divisor.c_[j].is_zero()) rem[k - dd + j] -= q * divisor.c_[j];
  }
  rem.resize(dd);
  return {Poly(std::move(quo), p_), Poly(std::move(rem), p_)};
}

FieldElement Poly::eval(const FieldElement& a) const {
  FieldElement acc(p_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * a + *it;
  return acc;
}

std::string Poly::to_string(const GroundField& k) const {
  if (c_.empty()) return "0";
  const std::string var = k.generator_name();
  std::string s;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const FieldElement& c = c_[i];
    if (c.is_zero()) continue;
    std::string term;
    if (i == 0) {
      term = c.to_string(var);
    } else {
      std::string mono = i == 1 ? "x" : "x^" + std::to_string(i);
      if (c.is_constant()) {
        const Rational q = c.constant_value();
        if (q == 1)
          term = mono;
        else if (q == -1)
          term = "-" + mono;
        else
          term = maclane::to_string(q) + "*" + mono;
      } else {
        term = "(" + c.to_string(var) + ")*" + mono;
      }
    }
    if (!s.empty() && term[0] != '-') s += "+";
    s += term;
  }
  return s;
}

std::vector<Poly> phi_expand(const Poly& f, const Poly& phi) {
  require(phi.degree() >= 1, ErrorCode::InvalidArgument, "expansion polynomial must have degree >= 1");
  require(phi.is_monic(), ErrorCode::InvalidArgument, "expansion polynomial must be monic");
  std::vector<Poly> out;
  Poly rest = f;
  while (!rest.is_zero()) {
    auto [q, r] = rest.divmod(phi);
    out.push_back(std::move(r));
    rest = std::move(q);
  }
  return out;
}

Poly phi_reassemble(const std::vector<Poly>& coeffs, const Poly& phi) {
  Poly acc(phi.characteristic());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * phi + *it;
  return acc;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  Parser(const GroundField& k, std::string_view text, bool allow_x)
      : k_(k), text_(text), allow_x_(allow_x) {}

  Poly run() {
    Poly r = expr();
    skip();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::Parse, "cannot parse \"" + std::string(text_) + "\" at offset " +
                               std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  std::uint32_t chr() const { return k_.characteristic(); }

  Poly constant(const FieldElement& c) const {
    return c.is_zero() ? Poly(chr()) : Poly::constant(c);
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      const char c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  static bool starts_atom(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 't' || c == 'u' || c == '(';
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= factor();
      } else if (c == '/') {
        ++pos_;
        const std::size_t at = pos_;
        Poly d = factor();
        if (d.is_zero()) {
          pos_ = at;
          error("division by zero");
        }
        if (d.degree() > 0) {
          pos_ = at;
          error("division by a polynomial in x");
        }
        acc = acc.scaled(d.leading().inverse());
      } else if (starts_atom(c)) {
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '+') {
      ++pos_;
      return factor();
    }
    Poly base = atom();
    if (peek() != '^') return base;
    ++pos_;
    bool neg = false;
    if (peek() == '-' || peek() == '+') neg = text_[pos_++] == '-';
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) error("expected an exponent");
    if (pos_ - start > 9) error("exponent too large");
    const auto e = std::stoull(std::string(text_.substr(start, pos_ - start)));
    if (!neg) return base.pow(e);
    if (base.degree() > 0) error("negative power of a polynomial in x");
    if (base.is_zero()) error("negative power of zero");
    return constant(base.leading().pow(-static_cast<std::int64_t>(e)));
  }

  Poly atom() {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const Rational q(BigInt(std::string(text_.substr(start, pos_ - start))));
      return constant(k_.from_rational(q));
    }
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (peek() != ')') error("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'x') {
      if (!allow_x_) error("'x' is not allowed in a field element");
      ++pos_;
      return Poly::x(chr());
    }
    if (c == 'u') {
      if (k_.kind() != FieldKind::FpT) error("'u' is only defined over F_p(u)");
      ++pos_;
      return constant(k_.generator());
    }
    if (c == 't') {
      if (k_.kind() == FieldKind::Qp) error("'t' is not defined over Q");
      ++pos_;
      return constant(k_.t());
    }
    if (c == '\0') error("unexpected end of input");
    error("unexpected '" + std::string(1, c) + "'");
  }

  const GroundField& k_;
  std::string_view text_;
  bool allow_x_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const GroundField& k, std::string_view text) { return Parser(k, text, true).run(); }

FieldElement parse_element(const GroundField& k, std::string_view text) {
  Poly p = Parser(k, text, false).run();
  return p.coeff(0);
}

}  // namespace maclane
