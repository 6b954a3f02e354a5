#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graded_lab/primality.hpp"

namespace graded_lab {

/// A fraction a/s written as (numerator, denominator).
using FractionPair = std::pair<Elem, Elem>;

/// Result of checking that the fraction relation is exactly "same class".
struct EquivalenceCheck {
  bool ok = true;
  std::size_t pairs_checked = 0;
  std::optional<std::pair<FractionPair, FractionPair>> counterexample;
};

/// Class bookkeeping shared by rings and modules of fractions.
struct FractionClasses {
  std::vector<Elem> denominators;           // members of S in increasing order
  std::vector<std::size_t> den_index;       // element -> position in denominators, or npos
  std::vector<Elem> class_of_pair;          // numerator * |S| + den position -> class
  std::vector<FractionPair> representative; // class -> lexicographically least pair
  Subset torsion;                           // {x : ux = 0 for some u in S}
  EquivalenceCheck equivalence;

  std::size_t class_count() const { return representative.size(); }
  /// Throws std::invalid_argument when den is not in S.
  Elem class_of(Elem num, Elem den) const;
  /// Every pair (num, den) in the class.
  std::vector<FractionPair> members(Elem cls) const;
};

class LocalizedRing {
 public:
  const RingPtr& base() const { return base_; }
  const MultiplicativeSet& s() const { return s_; }
  /// R_S as a validated graded ring.
  const RingPtr& ring() const { return ring_; }
  const FractionClasses& classes() const { return classes_; }

  Elem class_of(Elem r, Elem s) const { return classes_.class_of(r, s); }
  FractionPair representative(Elem cls) const { return classes_.representative[cls]; }
  /// r -> r/1.
  Elem phi(Elem r) const { return phi_[r]; }
  const std::vector<Elem>& phi_table() const { return phi_; }

 private:
  friend std::shared_ptr<const LocalizedRing> localize_ring(const RingPtr&, const MultiplicativeSet&);
  explicit LocalizedRing(MultiplicativeSet s) : s_(std::move(s)) {}
  RingPtr base_;
  MultiplicativeSet s_;
  RingPtr ring_;
  FractionClasses classes_;
  std::vector<Elem> phi_;
};
using LocalizedRingPtr = std::shared_ptr<const LocalizedRing>;

class LocalizedModule {
 public:
  const ModulePtr& base() const { return base_; }
  const LocalizedRingPtr& localized_ring() const { return ring_; }
  /// M_S as a validated graded R_S-module.
  const ModulePtr& module() const { return module_; }
  const FractionClasses& classes() const { return classes_; }

  Elem class_of(Elem m, Elem s) const { return classes_.class_of(m, s); }
  FractionPair representative(Elem cls) const { return classes_.representative[cls]; }
  Elem phi(Elem m) const { return phi_[m]; }
  const std::vector<Elem>& phi_table() const { return phi_; }

 private:
  friend std::shared_ptr<const LocalizedModule> localize_module(const ModulePtr&, const MultiplicativeSet&);
  friend std::shared_ptr<const LocalizedModule> localize_module(const ModulePtr&, const LocalizedRingPtr&);
  LocalizedModule() = default;
  ModulePtr base_;
  LocalizedRingPtr ring_;
  ModulePtr module_;
  FractionClasses classes_;
  std::vector<Elem> phi_;
};
using LocalizedModulePtr = std::shared_ptr<const LocalizedModule>;

/// R_S over the full carrier, deg(r/s) = deg r - deg s. Throws ValidationError if the
/// result does not validate (an internal invariant violation).
LocalizedRingPtr localize_ring(const RingPtr& ring, const MultiplicativeSet& s);
LocalizedModulePtr localize_module(const ModulePtr& module, const MultiplicativeSet& s);
LocalizedModulePtr localize_module(const ModulePtr& module, const LocalizedRingPtr& ring);

/// N_S = {n/s : n in N, s in S}.
GradedSubmodule extend_submodule(const LocalizedModule& lm, const GradedSubmodule& n);
/// P_S = {p/s : p in P, s in S}.
GradedIdeal extend_ideal(const LocalizedRing& lr, const GradedIdeal& p);
/// phi^{-1}(N').
GradedSubmodule contract(const LocalizedModule& lm, const GradedSubmodule& n_prime);
GradedIdeal contract_ideal(const LocalizedRing& lr, const GradedIdeal& p_prime);

/// phi is additive, multiplicative (resp. R-linear), sends 1 to 1 and keeps degrees.
struct HomomorphismCheck {
  bool ok = true;
  std::string failed;
  std::vector<Elem> witnesses;
};
HomomorphismCheck check_phi(const LocalizedRing& lr);
HomomorphismCheck check_phi(const LocalizedModule& lm);

struct ColonLocalization {
  bool equal = false;
  Subset extended_colon;   // (N :_R L)_S
  Subset localized_colon;  // (N_S :_{R_S} L_S)
};

/// Compares (N :_R L)_S with (N_S :_{R_S} L_S). Throws HypothesisUnmet unless N is weakly
/// primal and GW(N) misses S.
ColonLocalization colon_localization_check(const LocalizedModule& lm, const GradedSubmodule& n,
                                           const GradedSubmodule& l);

struct Correspondence {
  bool holds = true;
  /// (N, N_S) for every base submodule with adjoint P.
  std::vector<std::pair<Subset, Subset>> pairing;
  std::vector<Subset> localized_family;
  /// First submodule that breaks the correspondence, and on which side it lives.
  std::optional<Subset> unmatched;
  bool unmatched_is_localized = false;
  std::string reason;
};

/// Weakly primal submodules of M with adjoint P against those of M_S with adjoint P_S, under
/// N -> N_S and N' -> N' n M. Throws HypothesisUnmet unless P is a proper graded weakly prime
/// ideal missing S.
Correspondence correspondence_check(const LocalizedModule& lm, const GradedIdeal& p,
                                    std::size_t bound = kDefaultEnumerationBound);

}  // namespace graded_lab
