#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "graded_lab/errors.hpp"
#include "graded_lab/grading_group.hpp"
#include "graded_lab/subset.hpp"

namespace graded_lab {

/// Unvalidated description of a finite graded commutative ring.
///
/// `add` and `mul` are row-major order x order tables. `components[g]` lists
/// the members of R_g for every degree g of `group`; a missing trailing
/// component is read as {0}. When `zero`/`one` are absent they are located
/// from the tables.
struct RingTables {
  std::size_t order = 0;
  std::vector<Elem> add;
  std::vector<Elem> mul;
  std::optional<Elem> zero;
  std::optional<Elem> one;
  GradingGroup group;
  std::vector<std::vector<Elem>> components;
  std::vector<std::string> labels;
};

class GradedRing;
using RingPtr = std::shared_ptr<const GradedRing>;

template <typename T>
struct Validated {
  std::shared_ptr<const T> value;
  std::vector<Violation> errors;
  std::vector<Violation> warnings;
  bool ok() const { return value != nullptr; }
};

/// A validated, immutable finite G-graded commutative ring with identity.
class GradedRing {
 public:
  std::size_t order() const { return order_; }
  Elem zero() const { return zero_; }
  Elem one() const { return one_; }
  Elem add(Elem a, Elem b) const { return add_[a * order_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * order_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem power(Elem x, std::size_t k) const;

  const GradingGroup& group() const { return group_; }
  const Subset& component(Degree g) const { return components_[g]; }
  /// Homogeneous part of x in degree g.
  Elem part(Elem x, Degree g) const { return decomp_[x * group_.size() + g]; }
  /// Degree of a nonzero homogeneous element; nullopt for zero and non-homogeneous elements.
  std::optional<Degree> degree(Elem x) const { return degree_[x]; }
  bool is_homogeneous(Elem x) const { return homogeneous_.contains(x); }
  const Subset& homogeneous() const { return homogeneous_; }
  Subset all() const { return Subset::full(order_); }
  Subset empty_set() const { return Subset(order_); }
  Subset singleton(Elem x) const { return Subset(order_, {x}); }

  bool trivially_graded() const { return homogeneous_.size() == order_; }
  const std::vector<Violation>& warnings() const { return warnings_; }
  std::string label(Elem x) const;
  const std::vector<std::string>& labels() const { return labels_; }

  /// Raw tables this ring was validated from (re-validation, products, serialization).
  RingTables tables() const;

 private:
  friend Validated<GradedRing> validate_ring(const RingTables& candidate);
  GradedRing() = default;

  std::size_t order_ = 0;
  Elem zero_ = 0;
  Elem one_ = 0;
  std::vector<Elem> add_, mul_, neg_;
  GradingGroup group_;
  std::vector<Subset> components_;
  std::vector<Elem> decomp_;
  std::vector<std::optional<Degree>> degree_;
  Subset homogeneous_;
  std::vector<Violation> warnings_;
  std::vector<std::string> labels_;
};

/// Checks every ring and grading axiom exhaustively. Errors carry witnesses;
/// 1 outside R_e and R_e not closed under products are reported as warnings.
Validated<GradedRing> validate_ring(const RingTables& candidate);

/// validate_ring, throwing ValidationError on failure.
RingPtr make_ring(const RingTables& candidate);

/// h(R): union of all homogeneous components.
Subset homogeneous_elements(const GradedRing& ring);

/// Z/nZ with the trivial grading; element i is the residue i.
RingPtr make_Zn(std::size_t n);

/// Tables of Z_n[x]/(x^2 - a) graded by Z_2 (R_0 constants, R_1 multiples of x).
/// Element c0 + c1 x has index c0 + n * c1.
RingTables quadratic_tables(std::size_t n, std::size_t a);
RingPtr make_quadratic(std::size_t n, std::size_t a);

/// R x S with (R x S)_g = R_g x S_g; both factors need the same grading group.
/// Element (r, s) has index r + |R| * s.
RingPtr make_product(const GradedRing& left, const GradedRing& right);

}  // namespace graded_lab
