#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graded_lab/submodule.hpp"

namespace graded_lab {

/// A set of ring elements, each member carrying the element that certifies membership
/// (a module element m, or a second scalar y for ideal-level sets).
struct WitnessedSet {
  Subset members;
  std::vector<std::optional<Elem>> witness;  // indexed by ring element

  bool contains(Elem x) const { return members.contains(x); }
};

struct GwpCheck {
  bool gwp = true;
  std::optional<Elem> witness;  // m in h(M) \ N with 0 != xm in N
};

/// x is graded weakly prime to N: 0 != xm in N with m in h(M) forces m in N.
/// Throws NonHomogeneousScalar if x is not homogeneous.
GwpCheck is_gwp_to_submodule(Elem x, const GradedSubmodule& n);

/// GW(N): homogeneous scalars not graded weakly prime to N. Never contains 0.
WitnessedSet gw_set(const GradedSubmodule& n);
/// G(N): homogeneous x with xm in N for some m in h(M) \ N.
WitnessedSet g_set(const GradedSubmodule& n);
/// W(N): any x with 0 != xm in N for some m in M \ N.
WitnessedSet w_set(const GradedSubmodule& n);

struct PrimalityVerdict {
  Subset submodule;
  WitnessedSet gw, g, w;
  bool is_weakly_primal = false;
  bool is_primal = false;
  bool is_weakly_prime = false;
  bool is_weakly_primary = false;
  /// GW(N) + {0}, present exactly when N is weakly primal.
  std::optional<GradedIdeal> adjoint;
  /// Why GW(N) + {0} (resp. G(N) + {0}) is not a graded ideal.
  ClosureCheck weakly_primal_failure;
  ClosureCheck primal_failure;
  /// (x, m) breaking the weakly-prime / weakly-primary condition.
  std::optional<std::pair<Elem, Elem>> weakly_prime_counterexample;
  std::optional<std::pair<Elem, Elem>> weakly_primary_counterexample;
};

PrimalityVerdict classify(const GradedSubmodule& n);

/// gw(P) = {x in h(R) : 0 != xy in P for some y in h(R) \ P}; witness is y.
WitnessedSet gw_set_ideal(const GradedIdeal& p);
bool is_graded_weakly_primal_ideal(const GradedIdeal& p);

struct CharacterizationResult {
  bool holds = true;
  std::string reason;
  std::optional<Elem> scalar;  // the p at which a clause fails
};

/// Colon-based description of "N is weakly primal with adjoint P": P must be a graded ideal;
/// for homogeneous p outside P - {0}, (N :_M p) n h(M) lies in N u (0 :_M p); for homogeneous
/// 0 != p in P, it does not.
CharacterizationResult characterization_check(const GradedSubmodule& n, const Subset& p);
CharacterizationResult characterization_check(const GradedSubmodule& n, const GradedIdeal& p);

}  // namespace graded_lab
