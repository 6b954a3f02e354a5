#include "graded_lab/factorization.hpp"

#include <functional>
#include <limits>
#include <unordered_map>
#include <unordered_set>

namespace graded_lab {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct IdealTable {
  RingPtr ring;
  std::vector<GradedIdeal> ideals;
  std::unordered_map<Subset, std::size_t, SubsetHash> index;
  std::vector<std::size_t> factors;  // ideal indices allowed as factors
  std::size_t unit = kNone;
  std::vector<std::size_t> products;

  IdealTable(const RingPtr& r, FactorConvention convention, std::size_t bound)
      : ring(r), ideals(enumerate_graded_ideals(r, bound)) {
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      index.emplace(ideals[i].members(), i);
      if (ideals[i].is_unit()) unit = i;
      if (convention == FactorConvention::ProperIdeals && ideals[i].is_unit()) continue;
      if (is_graded_weakly_primal_ideal(ideals[i])) factors.push_back(i);
    }
    products.assign(ideals.size() * ideals.size(), kNone);
  }

  std::size_t product(std::size_t a, std::size_t b) {
    std::size_t& slot = products[a * ideals.size() + b];
    if (slot == kNone) slot = index.at(ideal_product(ideals[a], ideals[b]).members());
    return slot;
  }

  Factorization make(const std::vector<std::size_t>& tuple, std::size_t target) const {
    Factorization f;
    for (std::size_t i : tuple) f.factors.push_back(ideals[factors[i]].members());
    f.target = ideals[target].members();
    return f;
  }

  /// Visits non-decreasing tuples of factor positions of length len in lexicographic order,
  /// with the index of their product. The visitor returns true to stop.
  bool for_each_tuple(std::size_t len, const std::function<bool(const std::vector<std::size_t>&, std::size_t)>& visit) {
    std::vector<std::size_t> tuple;
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t acc) -> bool {
      if (tuple.size() == len) return visit(tuple, acc);
      for (std::size_t i = start; i < factors.size(); ++i) {
        tuple.push_back(i);
        const bool stop = rec(i, product(acc, factors[i]));
        tuple.pop_back();
        if (stop) return true;
      }
      return false;
    };
    return rec(0, unit);
  }
};

struct ModuleSearch {
  IdealTable& table;
  ModulePtr module;
  std::vector<GradedSubmodule> subs;
  std::unordered_map<Subset, std::size_t, SubsetHash> index;
  std::vector<std::size_t> tails;

  ModuleSearch(IdealTable& t, const ModulePtr& m, std::size_t bound)
      : table(t), module(m), subs(enumerate_graded_submodules(m, bound)) {
    for (std::size_t i = 0; i < subs.size(); ++i) {
      index.emplace(subs[i].members(), i);
      if (classify(subs[i]).is_weakly_primal) tails.push_back(i);
    }
  }

  // Fills found[k] for every submodule k reachable; stops early once `target` is found.
  std::size_t run(std::size_t max_len, std::vector<std::optional<Factorization>>& found,
                  std::size_t target = kNone) {
    found.assign(subs.size(), std::nullopt);
    std::size_t searched = 0, remaining = subs.size();
    std::unordered_set<std::size_t> seen_products;
    for (std::size_t len = 0; len <= max_len; ++len) {
      const bool stop = table.for_each_tuple(len, [&](const std::vector<std::size_t>& tuple, std::size_t prod) {
        if (!seen_products.insert(prod).second) return false;
        for (std::size_t k : tails) {
          ++searched;
          const std::size_t t = index.at(ideal_times_submodule(table.ideals[prod], subs[k]).members());
          if (found[t]) continue;
          Factorization f = table.make(tuple, table.unit);
          f.tail = subs[k].members();
          f.target = subs[t].members();
          found[t] = std::move(f);
          --remaining;
          if (t == target || remaining == 0) return true;
        }
        return false;
      });
      if (stop) break;
    }
    return searched;
  }
};

WpReport summarize(std::vector<std::optional<Factorization>> found, const std::vector<Subset>& targets,
                   std::size_t searched) {
  WpReport r;
  r.searched = searched;
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (!found[i] && r.is_wp) {
      r.is_wp = false;
      r.first_unfactorable = targets[i];
    }
  }
  r.factorizations = std::move(found);
  return r;
}

}  // namespace

std::string_view to_string(FactorConvention c) {
  return c == FactorConvention::AnyIdeal ? "any-ideal" : "proper-ideals";
}

WpReport is_wp_ring(const RingPtr& ring, std::size_t max_len, FactorConvention convention, std::size_t bound) {
  IdealTable table(ring, convention, bound);
  std::vector<std::optional<Factorization>> found(table.ideals.size());
  std::size_t searched = 0, remaining = table.ideals.size();
  if (convention == FactorConvention::ProperIdeals) {
    found[table.unit] = table.make({}, table.unit);
    --remaining;
  }
  for (std::size_t len = 1; len <= max_len && remaining > 0; ++len) {
    table.for_each_tuple(len, [&](const std::vector<std::size_t>& tuple, std::size_t prod) {
      ++searched;
      if (!found[prod]) {
        found[prod] = table.make(tuple, prod);
        --remaining;
      }
      return remaining == 0;
    });
  }
  std::vector<Subset> targets;
  for (const auto& i : table.ideals) targets.push_back(i.members());
  return summarize(std::move(found), targets, searched);
}

FactorSearch weakly_primal_factorization(const GradedSubmodule& n, std::size_t max_len,
                                         FactorConvention convention, std::size_t bound) {
  IdealTable table(n.module()->ring(), convention, bound);
  ModuleSearch search(table, n.module(), bound);
  std::vector<std::optional<Factorization>> found;
  const std::size_t target = search.index.at(n.members());
  FactorSearch out;
  out.searched = search.run(max_len, found, target);
  out.found = std::move(found[target]);
  return out;
}

WpReport is_wp_module(const ModulePtr& module, std::size_t max_len, FactorConvention convention,
                      std::size_t bound) {
  IdealTable table(module->ring(), convention, bound);
  ModuleSearch search(table, module, bound);
  std::vector<std::optional<Factorization>> found;
  const std::size_t searched = search.run(max_len, found);
  std::vector<Subset> targets;
  for (const auto& s : search.subs) targets.push_back(s.members());
  return summarize(std::move(found), targets, searched);
}

FactorizationCheck revalidate(const RingPtr& ring, const Factorization& f, FactorConvention convention) {
  if (f.tail) return {false, "ideal factorization carries a tail"};
  GradedIdeal acc = GradedIdeal::unit(ring);
  for (const Subset& p : f.factors) {
    if (!is_graded_ideal(*ring, p)) return {false, "factor is not a graded ideal"};
    const GradedIdeal ideal = GradedIdeal::from_members(ring, p);
    if (convention == FactorConvention::ProperIdeals && ideal.is_unit()) return {false, "unit factor"};
    if (!is_graded_weakly_primal_ideal(ideal)) return {false, "factor is not weakly primal"};
    acc = ideal_product(acc, ideal);
  }
  if (f.factors.empty() && convention == FactorConvention::AnyIdeal) return {false, "empty product"};
  if (acc.members() != f.target) return {false, "product differs from target"};
  return {};
}

FactorizationCheck revalidate(const ModulePtr& module, const Factorization& f, FactorConvention convention) {
  if (!f.tail) return {false, "module factorization without a tail"};
  const RingPtr& ring = module->ring();
  if (!is_graded_submodule(*module, *f.tail)) return {false, "tail is not a graded submodule"};
  const GradedSubmodule tail = GradedSubmodule::from_members(module, *f.tail);
  if (!classify(tail).is_weakly_primal) return {false, "tail is not weakly primal"};
  GradedIdeal acc = GradedIdeal::unit(ring);
  for (const Subset& p : f.factors) {
    if (!is_graded_ideal(*ring, p)) return {false, "factor is not a graded ideal"};
    const GradedIdeal ideal = GradedIdeal::from_members(ring, p);
    if (convention == FactorConvention::ProperIdeals && ideal.is_unit()) return {false, "unit factor"};
    if (!is_graded_weakly_primal_ideal(ideal)) return {false, "factor is not weakly primal"};
    acc = ideal_product(acc, ideal);
  }
  if (ideal_times_submodule(acc, tail).members() != f.target) return {false, "product differs from target"};
  return {};
}

Thm5Outcome check_thm5(const ModulePtr& module, std::size_t max_len, FactorConvention convention,
                       std::size_t bound) {
  Thm5Outcome out;
  try {
    if (!is_faithful(module)) {
      out.detail = "M is not faithful";
      return out;
    }
    if (!is_multiplication(module, bound).is_multiplication) {
      out.detail = "M is not a multiplication module";
      return out;
    }
    out.ring = is_wp_ring(module->ring(), max_len, convention, bound);
    if (!out.ring.is_wp) {
      out.detail = "R is not a WP-ring within the factor bound";
      return out;
    }
    out.module = is_wp_module(module, max_len, convention, bound);
    out.status = out.module.is_wp ? ClaimStatus::Confirmed : ClaimStatus::Refuted;
    out.detail = out.module.is_wp ? "every graded submodule factors" : "a graded submodule has no factorization";
  } catch (const BudgetExceeded& e) {
    out.status = ClaimStatus::BudgetExceeded;
    out.detail = e.what();
  }
  return out;
}

Rem2Outcome check_rem2(const ModulePtr& module, const GradedIdeal& p, std::size_t bound) {
  Rem2Outcome out;
  if (p.ring() != module->ring()) throw StructureMismatch("ideal of another ring");
  try {
    if (!is_multiplication(module, bound).is_multiplication) {
      out.detail = "M is not a multiplication module";
      return out;
    }
  } catch (const BudgetExceeded& e) {
    out.status = ClaimStatus::BudgetExceeded;
    out.detail = e.what();
    return out;
  }
  if (!ann_of_module(module).members().is_subset_of(p.members())) {
    out.detail = "P does not contain (0 :_R M)";
    return out;
  }
  out.colon = colon_into_ring(ideal_times_module(p, module)).members();
  out.status = *out.colon == p.members() ? ClaimStatus::Confirmed : ClaimStatus::Refuted;
  out.detail = out.status == ClaimStatus::Confirmed ? "(PM :_R M) = P" : "(PM :_R M) != P";
  return out;
}

}  // namespace graded_lab
