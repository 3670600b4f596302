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
#include "maclane/value_group.hpp"

#include <utility>

#include "maclane/error.hpp"

namespace maclane {

GroupElement::GroupElement(std::vector<Rational> coords)
    : infinite_(false), coords_(std::move(coords)) {
  require(!coords_.empty(), ErrorCode::InvalidArgument, "group elements need rank >= 1");
}

GroupElement GroupElement::zero(std::size_t rank) {
  return GroupElement(std::vector<Rational>(rank, Rational(0)));
}

GroupElement GroupElement::scalar(const Rational& q) { return GroupElement({q}); }

GroupElement GroupElement::unit(std::size_t rank, std::size_t i, const Rational& q) {
  std::vector<Rational> c(rank, Rational(0));
  c.at(i) = q;
  return GroupElement(std::move(c));
}

bool GroupElement::is_zero() const {
  if (infinite_) return false;
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

static void check_same_rank(const GroupElement& a, const GroupElement& b) {
  if (a.is_finite() && b.is_finite() && a.rank() != b.rank())
    fail(ErrorCode::InvalidArgument, "rank mismatch: " + a.to_string() + " vs " + b.to_string());
}

GroupElement GroupElement::operator+(const GroupElement& other) const {
  if (infinite_ || other.infinite_) return infinity();
  check_same_rank(*this, other);
  std::vector<Rational> c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += other.coords_[i];
  return GroupElement(std::move(c));
}

GroupElement GroupElement::operator-() const {
  require(!infinite_, ErrorCode::Domain, "cannot negate infinity");
  std::vector<Rational> c(coords_);
  for (auto& x : c) x = -x;
  return GroupElement(std::move(c));
}

GroupElement GroupElement::operator-(const GroupElement& other) const {
  require(!other.infinite_, ErrorCode::Domain, "cannot subtract infinity");
  return *this + (-other);
}

GroupElement GroupElement::scaled(const Rational& q) const {
  if (infinite_) {
    require(q > 0, ErrorCode::Domain, "infinity may only be scaled by a positive number");
    return infinity();
  }
  std::vector<Rational> c(coords_);
  for (auto& x : c) x *= q;
  return GroupElement(std::move(c));
}

std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
  if (a.infinite_ || b.infinite_) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  check_same_rank(a, b);
  for (std::size_t i = 0; i < a.coords_.size(); ++i) {
    const int c = cmp(a.coords_[i], b.coords_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string GroupElement::to_string() const {
  if (infinite_) return "inf";
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ",";
    s += maclane::to_string(coords_[i]);
  }
  return s + ")";
}

GroupElement operator*(std::int64_t n, const GroupElement& g) {
  if (g.is_infinite()) {
    require(n > 0, ErrorCode::Domain, "0 or negative multiple of infinity");
    return g;
  }
  return g.scaled(Rational(static_cast<long>(n)));
}

std::strong_ordering compare(const GroupElement& a, const GroupElement& b) { return a <=> b; }

const GroupElement& min(const GroupElement& a, const GroupElement& b) { return b < a ? b : a; }

// ---------------------------------------------------------------------------
// Subgroup

namespace {

using Row = std::vector<BigInt>;

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void axpy(Row& y, const BigInt& q, const Row& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] -= q * x[i];
}

// Row-style Hermite normal form: pivots positive, entries above each pivot
// reduced into [0, pivot).
void hermite(std::vector<Row>& m, std::vector<std::size_t>& pivots, std::size_t cols) {
  pivots.clear();
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < m.size(); ++col) {
    bool found = false;
    for (;;) {
      std::size_t pick = m.size();
      for (std::size_t i = r; i < m.size(); ++i) {
        if (m[i][col] == 0) continue;
        if (pick == m.size() || abs(m[i][col]) < abs(m[pick][col])) pick = i;
      }
      if (pick == m.size()) break;
      found = true;
      std::swap(m[r], m[pick]);
      bool clean = true;
      for (std::size_t i = r + 1; i < m.size(); ++i) {
        if (m[i][col] == 0) continue;
        axpy(m[i], floor_div(m[i][col], m[r][col]), m[r]);
        if (m[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (!found) continue;
    if (m[r][col] < 0)
      for (auto& x : m[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) axpy(m[i], floor_div(m[i][col], m[r][col]), m[r]);
    pivots.push_back(col);
    ++r;
  }
  m.resize(r);
}

}  // namespace

Subgroup::Subgroup(std::size_t rank, std::vector<GroupElement> generators)
    : rank_(rank), generators_(std::move(generators)) {
  require(rank_ >= 1, ErrorCode::InvalidArgument, "subgroup rank must be >= 1");
  for (const auto& g : generators_) {
    require(g.is_finite(), ErrorCode::InvalidArgument, "subgroup generators must be finite");
    check_rank(g);
    for (const auto& c : g.coords()) scale_ = lcm(scale_, BigInt(c.get_den()));
  }
  std::vector<Row> m;
  for (const auto& g : generators_) {
    Row row(rank_);
    bool nonzero = false;
    for (std::size_t i = 0; i < rank_; ++i) {
      Rational scaled = g[i] * scale_;
      row[i] = scaled.get_num();
      nonzero = nonzero || row[i] != 0;
    }
    if (nonzero) m.push_back(std::move(row));
  }
  hermite(m, pivots_, rank_);
  hnf_ = std::move(m);
}

void Subgroup::check_rank(const GroupElement& x) const {
  if (x.is_finite() && x.rank() != rank_)
    fail(ErrorCode::InvalidArgument, "rank mismatch: element " + x.to_string() +
                                         " in rank-" + std::to_string(rank_) + " group");
}

std::vector<GroupElement> Subgroup::basis() const {
  std::vector<GroupElement> out;
  for (const auto& row : hnf_) {
    std::vector<Rational> c(rank_);
    for (std::size_t i = 0; i < rank_; ++i) {
      c[i] = Rational(row[i], scale_);
      c[i].canonicalize();
    }
    out.emplace_back(std::move(c));
  }
  return out;
}

bool Subgroup::contains(const GroupElement& x) const {
  require(x.is_finite(), ErrorCode::InvalidArgument, "membership of infinity is undefined");
  check_rank(x);
  Row y(rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    Rational s = x[i] * scale_;
    if (s.get_den() != 1) return false;
    y[i] = s.get_num();
  }
  for (std::size_t j = 0; j < hnf_.size(); ++j) {
    const std::size_t c = pivots_[j];
    if (!mpz_divisible_p(y[c].get_mpz_t(), hnf_[j][c].get_mpz_t())) return false;
    BigInt q = y[c] / hnf_[j][c];
    axpy(y, q, hnf_[j]);
  }
  for (const auto& v : y)
    if (v != 0) return false;
  return true;
}

bool Subgroup::contains(const Subgroup& other) const {
  require(other.rank_ == rank_, ErrorCode::InvalidArgument, "subgroup rank mismatch");
  for (const auto& g : other.generators_)
    if (!contains(g)) return false;
  return true;
}

Subgroup Subgroup::join(std::span<const GroupElement> extra) const {
  std::vector<GroupElement> gens(generators_);
  gens.insert(gens.end(), extra.begin(), extra.end());
  return Subgroup(rank_, std::move(gens));
}

Subgroup Subgroup::join(const GroupElement& extra) const {
  return join(std::span<const GroupElement>(&extra, 1));
}

std::optional<BigInt> Subgroup::index_of(const Subgroup& sub) const {
  if (!contains(sub) || sub.dimension() != dimension()) return std::nullopt;
  BigInt num = 1, den = 1;
  const BigInt l = lcm(scale_, sub.scale_);
  for (std::size_t j = 0; j < hnf_.size(); ++j) {
    const std::size_t c = pivots_[j];
    den *= hnf_[j][c] * (l / scale_);
    num *= sub.hnf_[j][c] * (l / sub.scale_);
  }
  require(num % den == 0, ErrorCode::Internal, "non-integral subgroup index");
  return BigInt(num / den);
}

std::string Subgroup::to_string() const {
  std::string s = "<";
  const auto b = basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) s += ", ";
    s += b[i].to_string();
  }
  return s + ">";
}

MultipleSearch smallest_multiple_in(const GroupElement& gamma, const Subgroup& h,
                                    std::uint64_t bound) {
  require(gamma.is_finite(), ErrorCode::InvalidArgument, "smallest_multiple_in needs a finite element");
  require(gamma.rank() == h.rank(), ErrorCode::InvalidArgument, "rank mismatch in smallest_multiple_in");
  for (std::uint64_t e = 1; e <= bound; ++e)
    if (h.contains(gamma.scaled(Rational(static_cast<unsigned long>(e))))) return {e, bound};
  return {std::nullopt, bound};
}

}  // namespace maclane
