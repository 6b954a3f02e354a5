#include "graded_lab/ideal.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "closure.hpp"

namespace graded_lab {

ClosureCheck is_graded_ideal(const GradedRing& ring, const Subset& subset) {
  if (subset.universe() != ring.order()) return {false, "subset has the wrong universe", {}};
  if (!subset.contains(ring.zero())) return {false, "does not contain zero", {ring.zero()}};
  for (Elem a : subset) {
    for (Elem b : subset) {
      if (!subset.contains(ring.add(a, b))) return {false, "not closed under addition", {a, b, ring.add(a, b)}};
    }
  }
  for (Elem a : subset) {
    for (Elem r = 0; r < ring.order(); ++r) {
      if (!subset.contains(ring.mul(r, a))) {
        return {false, "not closed under multiplication by R", {r, a, ring.mul(r, a)}};
      }
    }
  }
  for (Elem a : subset) {
    for (Degree g = 0; g < ring.group().size(); ++g) {
      if (!subset.contains(ring.part(a, g))) {
        return {false, "homogeneous component missing", {a, static_cast<Elem>(g), ring.part(a, g)}};
      }
    }
  }
  return {};
}

GradedIdeal GradedIdeal::from_members(RingPtr ring, Subset members) {
  auto check = is_graded_ideal(*ring, members);
  if (!check) throw ValidationError({{"NotGradedIdeal", check.failed, check.witnesses}});
  return GradedIdeal(std::move(ring), std::move(members));
}

GradedIdeal GradedIdeal::zero(RingPtr ring) {
  Subset z = ring->singleton(ring->zero());
  return GradedIdeal(std::move(ring), std::move(z));
}

GradedIdeal GradedIdeal::unit(RingPtr ring) {
  Subset all = ring->all();
  return GradedIdeal(std::move(ring), std::move(all));
}

GradedIdeal ideal_generated_by(const RingPtr& ring, const Subset& generators) {
  const GradedRing& r = *ring;
  Subset members = detail::close_graded(
      r.order(), r.order(), r.group().size(), r.zero(), generators, [&](Elem a, Elem b) { return r.add(a, b); },
      [&](Elem s, Elem x) { return r.mul(s, x); }, [&](Elem x, std::size_t g) { return r.part(x, g); });
  return GradedIdeal(ring, std::move(members));
}

GradedIdeal ideal_generated_by(const RingPtr& ring, const std::vector<Elem>& generators) {
  return ideal_generated_by(ring, Subset::of(ring->order(), generators));
}

std::vector<GradedIdeal> enumerate_graded_ideals(const RingPtr& ring, std::size_t bound) {
  const GradedRing& r = *ring;
  if (r.order() > bound) {
    throw BudgetExceeded("ideal enumeration refused: ring order " + std::to_string(r.order()) + " exceeds bound " +
                         std::to_string(bound));
  }
  // Graded ideals are exactly the sums of principal ideals on homogeneous generators.
  std::vector<Subset> principal;
  std::unordered_set<Subset, SubsetHash> principal_seen;
  for (Elem h : r.homogeneous()) {
    Subset p = ideal_generated_by(ring, r.singleton(h)).members();
    if (principal_seen.insert(p).second) principal.push_back(std::move(p));
  }
  std::unordered_set<Subset, SubsetHash> seen;
  std::deque<Subset> queue;
  Subset zero = r.singleton(r.zero());
  seen.insert(zero);
  queue.push_back(zero);
  while (!queue.empty()) {
    Subset current = std::move(queue.front());
    queue.pop_front();
    for (const Subset& p : principal) {
      if (p.is_subset_of(current)) continue;
      Subset joined = detail::sumset(r.order(), current, p, [&](Elem a, Elem b) { return r.add(a, b); });
      if (seen.insert(joined).second) queue.push_back(std::move(joined));
    }
  }
  std::vector<Subset> sorted(seen.begin(), seen.end());
  std::sort(sorted.begin(), sorted.end(), canonical_less);
  std::vector<GradedIdeal> out;
  out.reserve(sorted.size());
  for (auto& s : sorted) out.push_back(GradedIdeal(ring, std::move(s)));
  return out;
}

GradedIdeal ideal_product(const GradedIdeal& a, const GradedIdeal& b) {
  if (a.ring() != b.ring()) throw StructureMismatch("ideal_product: ideals over different rings");
  const GradedRing& r = *a.ring();
  Subset products(r.order());
  for (Elem x : a.members()) {
    for (Elem y : b.members()) products.insert(r.mul(x, y));
  }
  return ideal_generated_by(a.ring(), products);
}

GradedIdeal ideal_sum(const GradedIdeal& a, const GradedIdeal& b) {
  if (a.ring() != b.ring()) throw StructureMismatch("ideal_sum: ideals over different rings");
  const GradedRing& r = *a.ring();
  return GradedIdeal(a.ring(),
                     detail::sumset(r.order(), a.members(), b.members(), [&](Elem x, Elem y) { return r.add(x, y); }));
}

GradedIdeal ideal_intersection(const GradedIdeal& a, const GradedIdeal& b) {
  if (a.ring() != b.ring()) throw StructureMismatch("ideal_intersection: ideals over different rings");
  return GradedIdeal(a.ring(), a.members() & b.members());
}

Subset homogeneous_radical(const GradedIdeal& ideal) {
  const GradedRing& r = *ideal.ring();
  Subset out(r.order());
  for (Elem x : r.homogeneous()) {
    Elem p = x;
    for (std::size_t k = 1; k <= r.order(); ++k) {
      if (ideal.contains(p)) {
        out.insert(x);
        break;
      }
      p = r.mul(p, x);
    }
  }
  return out;
}

PairCheck is_graded_weakly_prime_ideal(const GradedIdeal& ideal) {
  if (ideal.is_unit()) throw std::invalid_argument("is_graded_weakly_prime_ideal: unit ideal rejected");
  const GradedRing& r = *ideal.ring();
  for (Elem x : r.homogeneous()) {
    if (ideal.contains(x)) continue;
    for (Elem y : r.homogeneous()) {
      if (ideal.contains(y)) continue;
      const Elem xy = r.mul(x, y);
      if (xy != r.zero() && ideal.contains(xy)) return {false, std::make_pair(x, y)};
    }
  }
  return {};
}

ClosureCheck is_multiplicative_set(const GradedRing& ring, const Subset& subset) {
  if (subset.universe() != ring.order()) return {false, "subset has the wrong universe", {}};
  if (!subset.contains(ring.one())) return {false, "does not contain one", {ring.one()}};
  if (subset.contains(ring.zero())) return {false, "contains zero", {ring.zero()}};
  for (Elem a : subset) {
    if (!ring.is_homogeneous(a)) return {false, "member is not homogeneous", {a}};
  }
  for (Elem a : subset) {
    for (Elem b : subset) {
      if (!subset.contains(ring.mul(a, b))) return {false, "not closed under multiplication", {a, b}};
    }
  }
  return {};
}

MultiplicativeSet MultiplicativeSet::from_members(RingPtr ring, Subset members) {
  auto check = is_multiplicative_set(*ring, members);
  if (!check) throw ValidationError({{"NotMultiplicativeSet", check.failed, check.witnesses}});
  return MultiplicativeSet(std::move(ring), std::move(members));
}

namespace {

Subset monoid_closure(const GradedRing& r, Subset seeds) {
  std::vector<Elem> order(seeds.begin(), seeds.end());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::size_t known = order.size();
    for (std::size_t j = 0; j < known; ++j) {
      const Elem p = r.mul(order[i], order[j]);
      if (!seeds.contains(p)) {
        seeds.insert(p);
        order.push_back(p);
      }
    }
  }
  return seeds;
}

}  // namespace

std::optional<MultiplicativeSet> multiplicative_closure(const RingPtr& ring, const std::vector<Elem>& generators) {
  const GradedRing& r = *ring;
  Subset seeds = r.singleton(r.one());
  for (Elem g : generators) {
    if (g >= r.order() || !r.is_homogeneous(g)) return std::nullopt;
    seeds.insert(g);
  }
  Subset closed = monoid_closure(r, std::move(seeds));
  if (closed.contains(r.zero())) return std::nullopt;
  return MultiplicativeSet::from_members(ring, std::move(closed));
}

std::vector<MultiplicativeSet> enumerate_multiplicative_sets(const RingPtr& ring, std::size_t bound) {
  const GradedRing& r = *ring;
  if (r.order() > bound) {
    throw BudgetExceeded("multiplicative-set enumeration refused: ring order " + std::to_string(r.order()) +
                         " exceeds bound " + std::to_string(bound));
  }
  std::unordered_set<Subset, SubsetHash> seen;
  std::deque<Subset> queue;
  Subset start = monoid_closure(r, r.singleton(r.one()));
  if (start.contains(r.zero())) return {};  // zero ring
  seen.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    Subset current = std::move(queue.front());
    queue.pop_front();
    for (Elem h : r.homogeneous()) {
      if (h == r.zero() || current.contains(h)) continue;
      Subset next = current;
      next.insert(h);
      next = monoid_closure(r, std::move(next));
      if (next.contains(r.zero())) continue;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<Subset> sorted(seen.begin(), seen.end());
  std::sort(sorted.begin(), sorted.end(), canonical_less);
  std::vector<MultiplicativeSet> out;
  out.reserve(sorted.size());
  for (auto& s : sorted) out.push_back(MultiplicativeSet::from_members(ring, std::move(s)));
  return out;
}

}  // namespace graded_lab
