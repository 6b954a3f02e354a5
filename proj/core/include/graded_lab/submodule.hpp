#pragma once

#include <optional>
#include <vector>

#include "graded_lab/graded_module.hpp"
#include "graded_lab/ideal.hpp"

namespace graded_lab {

class GradedSubmodule {
 public:
  /// Throws ValidationError when `members` is not a graded submodule of `module`.
  static GradedSubmodule from_members(ModulePtr module, Subset members);
  /// Caller guarantees the invariants (used for results of closure operations).
  static GradedSubmodule trusted(ModulePtr module, Subset members) {
    return GradedSubmodule(std::move(module), std::move(members));
  }
  static GradedSubmodule whole(ModulePtr module);
  static GradedSubmodule zero(ModulePtr module);

  const ModulePtr& module() const { return module_; }
  const Subset& members() const { return members_; }
  bool contains(Elem m) const { return members_.contains(m); }
  std::size_t size() const { return members_.size(); }
  bool is_whole() const { return members_.size() == module_->order(); }

  bool operator==(const GradedSubmodule& o) const { return module_ == o.module_ && members_ == o.members_; }

 private:
  GradedSubmodule(ModulePtr module, Subset members) : module_(std::move(module)), members_(std::move(members)) {}
  ModulePtr module_;
  Subset members_;
};

ClosureCheck is_graded_submodule(const GradedModule& module, const Subset& subset);
GradedSubmodule submodule_generated_by(const ModulePtr& module, const Subset& generators);
GradedSubmodule submodule_generated_by(const ModulePtr& module, const std::vector<Elem>& generators);

/// All graded submodules, sorted by (size, members). Throws BudgetExceeded above `bound`.
std::vector<GradedSubmodule> enumerate_graded_submodules(const ModulePtr& module,
                                                         std::size_t bound = kDefaultEnumerationBound);

/// (N :_R M) = {r : rM in N}.
GradedIdeal colon_into_ring(const GradedSubmodule& n);
/// (N :_R L) = {r : rL in N}; N and L over the same module.
GradedIdeal colon_into_ring(const GradedSubmodule& n, const GradedSubmodule& l);

/// (N :_M I) = {m : Im in N}.
GradedSubmodule colon_into_module(const GradedSubmodule& n, const GradedIdeal& ideal);
/// (N :_M s), with s read as the graded principal ideal it generates.
GradedSubmodule colon_into_module(const GradedSubmodule& n, Elem s);

/// (0 :_M x).
GradedSubmodule ann_in_module(Elem x, const ModulePtr& module);
/// (0 :_R M).
GradedIdeal ann_of_module(const ModulePtr& module);
bool is_faithful(const ModulePtr& module);

struct QuotientModule {
  ModulePtr module;
  std::vector<Elem> projection;      // m -> coset index
  std::vector<Elem> representative;  // coset -> least member
};

/// M/N with (M/N)_g the image of M_g. Coset indices follow their least representatives.
QuotientModule quotient_module(const GradedSubmodule& n);

/// A homogeneous generator m with Rm = M, if one exists.
std::optional<Elem> is_cyclic(const ModulePtr& module);
/// Homogeneous generators picked greedily in index order; always succeeds for finite modules.
std::vector<Elem> is_finitely_generated(const ModulePtr& module);

struct MultiplicationCheck {
  bool is_multiplication = true;
  std::optional<GradedSubmodule> first_failure;
};

/// Decides N = (N :_R M) M for every graded submodule N.
MultiplicationCheck is_multiplication(const ModulePtr& module, std::size_t bound = kDefaultEnumerationBound);

/// IM.
GradedSubmodule ideal_times_module(const GradedIdeal& ideal, const ModulePtr& module);
/// IN.
GradedSubmodule ideal_times_submodule(const GradedIdeal& ideal, const GradedSubmodule& n);

}  // namespace graded_lab
