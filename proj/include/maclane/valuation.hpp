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
#ifndef MACLANE_VALUATION_HPP
#define MACLANE_VALUATION_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "maclane/poly.hpp"
#include "maclane/value_group.hpp"

namespace maclane {

class ContinuousFamily;

/// [v; x - center, gamma]
struct DepthZeroStep {
  FieldElement center;
  GroupElement gamma;
};

/// [mu; phi, gamma]
struct OrdinaryStep {
  Poly phi;
  GroupElement gamma;
  bool certified = false;
};

/// [C; phi, gamma]
struct LimitStep {
  std::shared_ptr<const ContinuousFamily> family;
  Poly phi;
  GroupElement gamma;
  bool certified = false;
};

using Step = std::variant<DepthZeroStep, OrdinaryStep, LimitStep>;

/// Key polynomial of a step (x - center for depth zero).
Poly step_phi(const Step& s, std::uint32_t characteristic);
const GroupElement& step_gamma(const Step& s);
bool is_limit(const Step& s);

struct ExpansionTerm {
  std::size_t index;
  Poly coeff;
  GroupElement value;  // mu(a_i) + i*gamma
};

struct GroupData {
  Subgroup gamma_mu;
  Subgroup gamma0;
  std::optional<std::uint64_t> e;  // nullopt: no multiple within `bound`
  std::uint64_t bound = 0;
};

/// A valuation on K[x] given by an augmentation chain
///   v -> mu_0 -> mu_1 -> ... -> mu_r
/// with a depth-zero root and ordinary or limit steps. Immutable; copies
/// share an evaluation cache.
class Valuation {
 public:
  static Valuation depth_zero(FieldPtr k, FieldElement center, GroupElement gamma);

  const GroundField& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  std::uint32_t characteristic() const noexcept { return field_->characteristic(); }
  const std::vector<Step>& steps() const noexcept { return steps_; }
  /// r, the index of the top step.
  std::size_t depth() const noexcept { return steps_.size() - 1; }

  /// The chain truncated to its first n steps, n >= 1.
  Valuation prefix(std::size_t n) const;
  /// Appends a step without any validation.
  Valuation extended_unchecked(Step s) const;

  Poly key_polynomial() const;
  const GroupElement& top_gamma() const { return step_gamma(steps_.back()); }
  /// deg of the top key polynomial.
  std::int64_t degree() const { return key_polynomial().degree(); }
  bool has_support() const { return top_gamma().is_infinite(); }

  GroupElement evaluate(const Poly& f) const;
  GroupElement operator()(const Poly& f) const { return evaluate(f); }
  GroupElement evaluate(const FieldElement& a) const;

  /// Expansion of f in the top key polynomial with term values.
  std::vector<ExpansionTerm> expansion(const Poly& f) const;
  /// Expansion of f in an arbitrary monic phi, valued by this valuation.
  std::vector<ExpansionTerm> expansion(const Poly& f, const Poly& phi) const;

  /// S-set against the top key polynomial; f must not be in the support.
  std::set<std::size_t> s_set(const Poly& f) const;
  std::set<std::size_t> s_set(const Poly& f, const Poly& phi) const;
  /// max S, or 0 when the top value is infinite.
  std::size_t deg_mu(const Poly& f) const;

  GroupData group_data(std::uint64_t bound = kDefaultMultipleBound) const;

  /// e.g. "v -> mu_0 = [x, (0,0)] -> ...", one arrow per step.
  std::string describe() const;

 private:
  struct Cache {
    std::mutex lock;
    std::vector<std::unordered_map<std::string, GroupElement>> values;
  };

  Valuation(FieldPtr k, std::vector<Step> steps);
  GroupElement evaluate_at(std::size_t level, const Poly& f) const;

  FieldPtr field_;
  std::vector<Step> steps_;
  std::shared_ptr<Cache> cache_;
};

struct FamilyPoint {
  Poly phi;
  GroupElement gamma;
};

/// A continuous family (rho_n), rho_n = [base; phi_n, gamma_n], n = 0..horizon.
///
/// Construction checks gamma_n increasing, rho_n < rho_{n+1}, base <= rho_0
/// and deg phi_n = deg base. Under these checks rho_n(a) = rho_{n+1}(a)
/// already forces rho_m(a) = rho_n(a) for every m > n, so the stable value
/// of `a` is read off at the first repeat.
class ContinuousFamily {
 public:
  /// `descriptor` is the JSON text the family was declared with; it is kept
  /// verbatim for serialization.
  ContinuousFamily(Valuation base, std::vector<FamilyPoint> points, std::string descriptor = "{}",
                   std::map<std::string, std::size_t> certificates = {});

  const Valuation& base() const noexcept { return base_; }
  const std::vector<FamilyPoint>& points() const noexcept { return points_; }
  std::size_t horizon() const noexcept { return points_.size() - 1; }
  std::int64_t degree() const noexcept { return base_.degree(); }
  const std::string& descriptor() const noexcept { return descriptor_; }
  /// rho_n.
  const Valuation& member(std::size_t n) const { return members_.at(n); }

  /// Declared stable index of f, keyed by its text in the base field.
  std::optional<std::size_t> certificate(const Poly& f) const;
  const std::map<std::string, std::size_t>& certificates() const noexcept { return certificates_; }

  /// rho_C(f). Throws Undetermined when no repeat occurs within the horizon.
  GroupElement stable_value(const Poly& f) const;

 private:
  Valuation base_;
  std::vector<FamilyPoint> points_;
  std::vector<Valuation> members_;
  std::string descriptor_;
  std::map<std::string, std::size_t> certificates_;
  mutable std::mutex lock_;
  mutable std::unordered_map<std::string, GroupElement> stable_;
};

/// Structural key used for caches.
std::string poly_key(const Poly& f);

}  // namespace maclane

#endif
