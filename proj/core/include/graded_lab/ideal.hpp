#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graded_lab/graded_ring.hpp"

namespace graded_lab {

inline constexpr std::size_t kDefaultEnumerationBound = 64;

/// Outcome of a closure test: on failure, the first violated condition and its witnesses.
struct ClosureCheck {
  bool ok = true;
  std::string failed;
  std::vector<Elem> witnesses;
  explicit operator bool() const { return ok; }
};

class GradedIdeal {
 public:
  /// Throws ValidationError when `members` is not a graded ideal of `ring`.
  static GradedIdeal from_members(RingPtr ring, Subset members);
  static GradedIdeal zero(RingPtr ring);
  static GradedIdeal unit(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const Subset& members() const { return members_; }
  bool contains(Elem x) const { return members_.contains(x); }
  std::size_t size() const { return members_.size(); }
  bool is_unit() const { return members_.size() == ring_->order(); }

  bool operator==(const GradedIdeal& o) const { return ring_ == o.ring_ && members_ == o.members_; }

 private:
  GradedIdeal(RingPtr ring, Subset members) : ring_(std::move(ring)), members_(std::move(members)) {}
  friend GradedIdeal ideal_generated_by(const RingPtr&, const Subset&);
  friend GradedIdeal ideal_sum(const GradedIdeal&, const GradedIdeal&);
  friend GradedIdeal ideal_intersection(const GradedIdeal&, const GradedIdeal&);
  friend std::vector<GradedIdeal> enumerate_graded_ideals(const RingPtr&, std::size_t);

  RingPtr ring_;
  Subset members_;
};

/// Contains zero, closed under + and under multiplication by R, and contains the
/// homogeneous components of each member.
ClosureCheck is_graded_ideal(const GradedRing& ring, const Subset& subset);

/// Smallest graded ideal containing the generators (fixed point of the closure).
GradedIdeal ideal_generated_by(const RingPtr& ring, const Subset& generators);
GradedIdeal ideal_generated_by(const RingPtr& ring, const std::vector<Elem>& generators);

/// All graded ideals, sorted by (size, members). Throws BudgetExceeded above `bound`.
std::vector<GradedIdeal> enumerate_graded_ideals(const RingPtr& ring,
                                                 std::size_t bound = kDefaultEnumerationBound);

GradedIdeal ideal_product(const GradedIdeal& a, const GradedIdeal& b);
GradedIdeal ideal_sum(const GradedIdeal& a, const GradedIdeal& b);
GradedIdeal ideal_intersection(const GradedIdeal& a, const GradedIdeal& b);

/// {x in h(R) : x^k in I for some 1 <= k <= |R|}.
Subset homogeneous_radical(const GradedIdeal& ideal);

struct PairCheck {
  bool holds = true;
  std::optional<std::pair<Elem, Elem>> counterexample;
};

/// For homogeneous x, y: 0 != xy in I implies x in I or y in I. Rejects the unit ideal.
PairCheck is_graded_weakly_prime_ideal(const GradedIdeal& ideal);

/// Multiplicatively closed subset of h(R) containing 1 and not 0.
class MultiplicativeSet {
 public:
  /// Throws ValidationError when the invariants fail.
  static MultiplicativeSet from_members(RingPtr ring, Subset members);

  const RingPtr& ring() const { return ring_; }
  const Subset& members() const { return members_; }
  bool contains(Elem x) const { return members_.contains(x); }
  std::size_t size() const { return members_.size(); }

 private:
  MultiplicativeSet(RingPtr ring, Subset members) : ring_(std::move(ring)), members_(std::move(members)) {}
  RingPtr ring_;
  Subset members_;
};

ClosureCheck is_multiplicative_set(const GradedRing& ring, const Subset& subset);

/// Multiplicative closure of {1} and the generators; nullopt if it reaches zero
/// or a generator is not homogeneous.
std::optional<MultiplicativeSet> multiplicative_closure(const RingPtr& ring, const std::vector<Elem>& generators);

/// Every multiplicative set of R, sorted by (size, members).
std::vector<MultiplicativeSet> enumerate_multiplicative_sets(const RingPtr& ring,
                                                             std::size_t bound = kDefaultEnumerationBound);

}  // namespace graded_lab
