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
#ifndef MACLANE_VALUE_GROUP_HPP
#define MACLANE_VALUE_GROUP_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "maclane/rational.hpp"

namespace maclane {

/// An element of Q^k under the lexicographic order, or the symbol infinity,
/// which compares above every finite element.
///
/// A default-constructed element is infinity; this makes it the neutral
/// starting point for running minima.
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(std::vector<Rational> coords);

  static GroupElement infinity() { return GroupElement(); }
  static GroupElement zero(std::size_t rank);
  /// Rank-one shorthand.
  static GroupElement scalar(const Rational& q);
  /// e_i * q in Q^rank.
  static GroupElement unit(std::size_t rank, std::size_t i, const Rational& q = 1);

  bool is_infinite() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }
  /// 0 for infinity.
  std::size_t rank() const noexcept { return coords_.size(); }
  const std::vector<Rational>& coords() const noexcept { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_.at(i); }
  bool is_zero() const;

  GroupElement operator+(const GroupElement& other) const;
  GroupElement operator-(const GroupElement& other) const;
  GroupElement operator-() const;
  GroupElement& operator+=(const GroupElement& other) { return *this = *this + other; }
  /// Componentwise scaling. Infinity may only be scaled by positive numbers.
  GroupElement scaled(const Rational& q) const;

  /// Throws on rank mismatch between finite elements.
  friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b);
  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

  /// "(1,0)", "(3/2)" or "inf".
  std::string to_string() const;

 private:
  bool infinite_ = true;
  std::vector<Rational> coords_;
};

GroupElement operator*(std::int64_t n, const GroupElement& g);
std::strong_ordering compare(const GroupElement& a, const GroupElement& b);
const GroupElement& min(const GroupElement& a, const GroupElement& b);

/// The subgroup of Q^k generated over Z by finitely many finite elements.
/// Membership is decided exactly on a Hermite normal form of the scaled
/// generator matrix.
class Subgroup {
 public:
  explicit Subgroup(std::size_t rank, std::vector<GroupElement> generators = {});

  std::size_t rank() const noexcept { return rank_; }
  const std::vector<GroupElement>& generators() const noexcept { return generators_; }
  /// Z-rank of the lattice.
  std::size_t dimension() const noexcept { return hnf_.size(); }
  /// Reduced echelon basis, one element per dimension.
  std::vector<GroupElement> basis() const;

  bool contains(const GroupElement& x) const;
  bool contains(const Subgroup& other) const;
  Subgroup join(std::span<const GroupElement> extra) const;
  Subgroup join(const GroupElement& extra) const;

  /// (this : sub) when sub is a subgroup of the same dimension; nullopt when
  /// sub is not contained or the index is infinite.
  std::optional<BigInt> index_of(const Subgroup& sub) const;

  /// Same membership predicate.
  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.contains(b) && b.contains(a);
  }

  std::string to_string() const;

 private:
  void check_rank(const GroupElement& x) const;

  std::size_t rank_;
  std::vector<GroupElement> generators_;
  BigInt scale_ = 1;                       // generators * scale_ are integral
  std::vector<std::vector<BigInt>> hnf_;   // rows, pivots strictly increasing
  std::vector<std::size_t> pivots_;
};

struct MultipleSearch {
  std::optional<std::uint64_t> multiple;  // nullopt: none up to `bound`
  std::uint64_t bound = 0;
};

inline constexpr std::uint64_t kDefaultMultipleBound = 10000;

/// Least e >= 1 with e*gamma in h, searched up to `bound`.
MultipleSearch smallest_multiple_in(const GroupElement& gamma, const Subgroup& h,
                                    std::uint64_t bound = kDefaultMultipleBound);

}  // namespace maclane

#endif
