#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graded_lab/claim_status.hpp"
#include "graded_lab/primality.hpp"

namespace graded_lab {

inline constexpr std::size_t kDefaultMaxFactors = 4;

/// Whether factors may be the unit ideal. Under ProperIdeals the unit ideal of a ring is
/// accepted as the empty product.
enum class FactorConvention { AnyIdeal, ProperIdeals };

std::string_view to_string(FactorConvention c);

/// target = factors[0] ... factors[n-1] (tail), where tail is absent for ideal factorizations.
struct Factorization {
  std::vector<Subset> factors;
  std::optional<Subset> tail;
  Subset target;
};

struct FactorSearch {
  std::optional<Factorization> found;
  /// Factor tuples (times tails, for modules) examined.
  std::size_t searched = 0;
};

struct WpReport {
  bool is_wp = true;
  /// One entry per graded ideal (resp. submodule), in enumeration order; nullopt when unfactored.
  std::vector<std::optional<Factorization>> factorizations;
  std::optional<Subset> first_unfactorable;
  std::size_t searched = 0;
};

/// Every graded ideal as a product of 1..max_len graded weakly primal ideals (non-decreasing
/// enumeration order, shortest first).
WpReport is_wp_ring(const RingPtr& ring, std::size_t max_len = kDefaultMaxFactors,
                    FactorConvention convention = FactorConvention::AnyIdeal,
                    std::size_t bound = kDefaultEnumerationBound);

/// First N = P_1 ... P_n N* with 0 <= n <= max_len in canonical order, or the size of the
/// exhausted search space.
FactorSearch weakly_primal_factorization(const GradedSubmodule& n, std::size_t max_len = kDefaultMaxFactors,
                                         FactorConvention convention = FactorConvention::AnyIdeal,
                                         std::size_t bound = kDefaultEnumerationBound);

WpReport is_wp_module(const ModulePtr& module, std::size_t max_len = kDefaultMaxFactors,
                      FactorConvention convention = FactorConvention::AnyIdeal,
                      std::size_t bound = kDefaultEnumerationBound);

struct FactorizationCheck {
  bool ok = true;
  std::string failed;
};

/// Recomputes every factor predicate and the product from scratch.
FactorizationCheck revalidate(const RingPtr& ring, const Factorization& f, FactorConvention convention);
FactorizationCheck revalidate(const ModulePtr& module, const Factorization& f, FactorConvention convention);

struct Thm5Outcome {
  ClaimStatus status = ClaimStatus::HypothesisUnmet;
  std::string detail;
  WpReport ring;
  WpReport module;
};

/// Faithful multiplication M over a WP-ring must be a WP-module.
Thm5Outcome check_thm5(const ModulePtr& module, std::size_t max_len = kDefaultMaxFactors,
                       FactorConvention convention = FactorConvention::AnyIdeal,
                       std::size_t bound = kDefaultEnumerationBound);

struct Rem2Outcome {
  ClaimStatus status = ClaimStatus::HypothesisUnmet;
  std::string detail;
  std::optional<Subset> colon;  // (PM :_R M)
};

/// (PM :_R M) = P for multiplication M and P containing (0 :_R M).
Rem2Outcome check_rem2(const ModulePtr& module, const GradedIdeal& p,
                       std::size_t bound = kDefaultEnumerationBound);

}  // namespace graded_lab
