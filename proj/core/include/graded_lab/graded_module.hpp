#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "graded_lab/graded_ring.hpp"

namespace graded_lab {

/// Unvalidated finite graded module. `action` is |R| x order, row-major: action[r * order + m] = r m.
struct ModuleTables {
  RingPtr ring;
  std::size_t order = 0;
  std::vector<Elem> add;
  std::vector<Elem> action;
  std::optional<Elem> zero;
  std::vector<std::vector<Elem>> components;
  std::vector<std::string> labels;
};

class GradedModule;
using ModulePtr = std::shared_ptr<const GradedModule>;

/// A validated, immutable finite G-graded R-module.
class GradedModule {
 public:
  const RingPtr& ring() const { return ring_; }
  std::size_t order() const { return order_; }
  Elem zero() const { return zero_; }
  Elem add(Elem a, Elem b) const { return add_[a * order_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem act(Elem r, Elem m) const { return action_[r * order_ + m]; }

  const Subset& component(Degree g) const { return components_[g]; }
  Elem part(Elem m, Degree g) const { return decomp_[m * ring_->group().size() + g]; }
  std::optional<Degree> degree(Elem m) const { return degree_[m]; }
  bool is_homogeneous(Elem m) const { return homogeneous_.contains(m); }
  const Subset& homogeneous() const { return homogeneous_; }
  Subset all() const { return Subset::full(order_); }
  Subset empty_set() const { return Subset(order_); }
  Subset singleton(Elem m) const { return Subset(order_, {m}); }

  const std::vector<Violation>& warnings() const { return warnings_; }
  std::string label(Elem m) const;
  ModuleTables tables() const;

 private:
  friend Validated<GradedModule> validate_module(const ModuleTables& candidate);
  GradedModule() = default;

  RingPtr ring_;
  std::size_t order_ = 0;
  Elem zero_ = 0;
  std::vector<Elem> add_, neg_, action_;
  std::vector<Subset> components_;
  std::vector<Elem> decomp_;
  std::vector<std::optional<Degree>> degree_;
  Subset homogeneous_;
  std::vector<Violation> warnings_;
  std::vector<std::string> labels_;
};

/// Abelian group, action laws, internal direct sum, and R_g M_h inside M_{gh}.
Validated<GradedModule> validate_module(const ModuleTables& candidate);
ModulePtr make_module(const ModuleTables& candidate);

/// R as a graded module over itself.
ModulePtr self_module(const RingPtr& ring);
/// R^k with (R^k)_g = (R_g)^k; element (c_0, ..., c_{k-1}) has index sum c_i |R|^i.
ModulePtr free_module(const RingPtr& ring, std::size_t rank);
ModulePtr zero_module(const RingPtr& ring);
/// M1 + M2; element (a, b) has index a + |M1| b.
ModulePtr direct_sum(const GradedModule& left, const GradedModule& right);

}  // namespace graded_lab
