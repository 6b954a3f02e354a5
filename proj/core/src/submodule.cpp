#include "graded_lab/submodule.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "closure.hpp"

namespace graded_lab {

namespace {

void require_same_ring(const GradedRing* a, const GradedRing* b, const char* where) {
  if (a != b) throw StructureMismatch(std::string(where) + ": ideal and module over different rings");
}

}  // namespace

ClosureCheck is_graded_submodule(const GradedModule& module, const Subset& subset) {
  const GradedRing& R = *module.ring();
  if (subset.universe() != module.order()) return {false, "subset has the wrong universe", {}};
  if (!subset.contains(module.zero())) return {false, "does not contain zero", {module.zero()}};
  for (Elem a : subset) {
    for (Elem b : subset) {
      if (!subset.contains(module.add(a, b))) return {false, "not closed under addition", {a, b, module.add(a, b)}};
    }
  }
  for (Elem m : subset) {
    for (Elem r = 0; r < R.order(); ++r) {
      if (!subset.contains(module.act(r, m))) {
        return {false, "not closed under the scalar action", {r, m, module.act(r, m)}};
      }
    }
  }
  for (Elem m : subset) {
    for (Degree g = 0; g < R.group().size(); ++g) {
      if (!subset.contains(module.part(m, g))) {
        return {false, "homogeneous component missing", {m, static_cast<Elem>(g), module.part(m, g)}};
      }
    }
  }
  return {};
}

GradedSubmodule GradedSubmodule::from_members(ModulePtr module, Subset members) {
  auto check = is_graded_submodule(*module, members);
  if (!check) throw ValidationError({{"NotGradedSubmodule", check.failed, check.witnesses}});
  return GradedSubmodule(std::move(module), std::move(members));
}

GradedSubmodule GradedSubmodule::whole(ModulePtr module) {
  Subset all = module->all();
  return GradedSubmodule(std::move(module), std::move(all));
}

GradedSubmodule GradedSubmodule::zero(ModulePtr module) {
  Subset z = module->singleton(module->zero());
  return GradedSubmodule(std::move(module), std::move(z));
}

GradedSubmodule submodule_generated_by(const ModulePtr& module, const Subset& generators) {
  const GradedModule& M = *module;
  const GradedRing& R = *M.ring();
  Subset members = detail::close_graded(
      M.order(), R.order(), R.group().size(), M.zero(), generators, [&](Elem a, Elem b) { return M.add(a, b); },
      [&](Elem r, Elem m) { return M.act(r, m); }, [&](Elem m, std::size_t g) { return M.part(m, g); });
  return GradedSubmodule::trusted(module, std::move(members));
}

GradedSubmodule submodule_generated_by(const ModulePtr& module, const std::vector<Elem>& generators) {
  return submodule_generated_by(module, Subset::of(module->order(), generators));
}

std::vector<GradedSubmodule> enumerate_graded_submodules(const ModulePtr& module, std::size_t bound) {
  const GradedModule& M = *module;
  if (M.order() > bound) {
    throw BudgetExceeded("submodule enumeration refused: module order " + std::to_string(M.order()) +
                         " exceeds bound " + std::to_string(bound));
  }
  std::vector<Subset> cyclic;
  std::unordered_set<Subset, SubsetHash> cyclic_seen;
  for (Elem h : M.homogeneous()) {
    Subset c = submodule_generated_by(module, M.singleton(h)).members();
    if (cyclic_seen.insert(c).second) cyclic.push_back(std::move(c));
  }
  std::unordered_set<Subset, SubsetHash> seen;
  std::deque<Subset> queue;
  Subset zero = M.singleton(M.zero());
  seen.insert(zero);
  queue.push_back(zero);
  while (!queue.empty()) {
    Subset current = std::move(queue.front());
    queue.pop_front();
    for (const Subset& c : cyclic) {
      if (c.is_subset_of(current)) continue;
      Subset joined = detail::sumset(M.order(), current, c, [&](Elem a, Elem b) { return M.add(a, b); });
      if (seen.insert(joined).second) queue.push_back(std::move(joined));
    }
  }
  std::vector<Subset> sorted(seen.begin(), seen.end());
  std::sort(sorted.begin(), sorted.end(), canonical_less);
  std::vector<GradedSubmodule> out;
  out.reserve(sorted.size());
  for (auto& s : sorted) out.push_back(GradedSubmodule::trusted(module, std::move(s)));
  return out;
}

GradedIdeal colon_into_ring(const GradedSubmodule& n) {
  return colon_into_ring(n, GradedSubmodule::whole(n.module()));
}

GradedIdeal colon_into_ring(const GradedSubmodule& n, const GradedSubmodule& l) {
  if (n.module() != l.module()) throw StructureMismatch("colon_into_ring: submodules of different modules");
  const GradedModule& M = *n.module();
  const GradedRing& R = *M.ring();
  Subset out(R.order());
  for (Elem r = 0; r < R.order(); ++r) {
    bool inside = true;
    for (Elem m : l.members()) {
      if (!n.contains(M.act(r, m))) {
        inside = false;
        break;
      }
    }
    if (inside) out.insert(r);
  }
  return GradedIdeal::from_members(M.ring(), std::move(out));
}

GradedSubmodule colon_into_module(const GradedSubmodule& n, const GradedIdeal& ideal) {
  const GradedModule& M = *n.module();
  require_same_ring(M.ring().get(), ideal.ring().get(), "colon_into_module");
  Subset out(M.order());
  for (Elem m = 0; m < M.order(); ++m) {
    bool inside = true;
    for (Elem a : ideal.members()) {
      if (!n.contains(M.act(a, m))) {
        inside = false;
        break;
      }
    }
    if (inside) out.insert(m);
  }
  return GradedSubmodule::trusted(n.module(), std::move(out));
}

GradedSubmodule colon_into_module(const GradedSubmodule& n, Elem s) {
  return colon_into_module(n, ideal_generated_by(n.module()->ring(), std::vector<Elem>{s}));
}

GradedSubmodule ann_in_module(Elem x, const ModulePtr& module) {
  return colon_into_module(GradedSubmodule::zero(module), x);
}

GradedIdeal ann_of_module(const ModulePtr& module) { return colon_into_ring(GradedSubmodule::zero(module)); }

bool is_faithful(const ModulePtr& module) { return ann_of_module(module).size() == 1; }

QuotientModule quotient_module(const GradedSubmodule& n) {
  const GradedModule& M = *n.module();
  const GradedRing& R = *M.ring();
  QuotientModule q;
  q.projection.assign(M.order(), 0);
  std::vector<bool> assigned(M.order(), false);
  for (Elem m = 0; m < M.order(); ++m) {
    if (assigned[m]) continue;
    const Elem coset = static_cast<Elem>(q.representative.size());
    q.representative.push_back(m);
    for (Elem x : n.members()) {
      const Elem y = M.add(m, x);
      assigned[y] = true;
      q.projection[y] = coset;
    }
  }
  const std::size_t k = q.representative.size();
  ModuleTables t;
  t.ring = M.ring();
  t.order = k;
  t.add.resize(k * k);
  t.action.resize(R.order() * k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      t.add[a * k + b] = q.projection[M.add(q.representative[a], q.representative[b])];
    }
    for (Elem r = 0; r < R.order(); ++r) t.action[r * k + a] = q.projection[M.act(r, q.representative[a])];
  }
  t.zero = q.projection[M.zero()];
  t.components.assign(R.group().size(), {});
  for (Degree g = 0; g < R.group().size(); ++g) {
    Subset image(k);
    for (Elem m : M.component(g)) image.insert(q.projection[m]);
    t.components[g] = image.members();
  }
  t.labels.resize(k);
  for (std::size_t a = 0; a < k; ++a) t.labels[a] = "[" + M.label(q.representative[a]) + "]";
  q.module = make_module(t);
  return q;
}

std::optional<Elem> is_cyclic(const ModulePtr& module) {
  const GradedModule& M = *module;
  for (Elem m : M.homogeneous()) {
    if (submodule_generated_by(module, M.singleton(m)).is_whole()) return m;
  }
  return std::nullopt;
}

std::vector<Elem> is_finitely_generated(const ModulePtr& module) {
  const GradedModule& M = *module;
  std::vector<Elem> gens;
  Subset span = M.singleton(M.zero());
  for (Elem m : M.homogeneous()) {
    if (span.contains(m)) continue;
    gens.push_back(m);
    span = submodule_generated_by(module, Subset::of(M.order(), gens)).members();
    if (span.size() == M.order()) break;
  }
  return gens;
}

MultiplicationCheck is_multiplication(const ModulePtr& module, std::size_t bound) {
  for (const auto& n : enumerate_graded_submodules(module, bound)) {
    if (!(ideal_times_module(colon_into_ring(n), module) == n)) return {false, n};
  }
  return {};
}

GradedSubmodule ideal_times_module(const GradedIdeal& ideal, const ModulePtr& module) {
  return ideal_times_submodule(ideal, GradedSubmodule::whole(module));
}

GradedSubmodule ideal_times_submodule(const GradedIdeal& ideal, const GradedSubmodule& n) {
  const GradedModule& M = *n.module();
  require_same_ring(M.ring().get(), ideal.ring().get(), "ideal_times_submodule");
  Subset products(M.order());
  for (Elem a : ideal.members()) {
    for (Elem m : n.members()) products.insert(M.act(a, m));
  }
  return submodule_generated_by(n.module(), products);
}

}  // namespace graded_lab
