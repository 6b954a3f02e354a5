#include "graded_lab/graded_module.hpp"

#include "table_checks.hpp"

namespace graded_lab {

std::string GradedModule::label(Elem m) const {
  if (m < labels_.size()) return labels_[m];
  return std::to_string(m);
}

ModuleTables GradedModule::tables() const {
  ModuleTables t;
  t.ring = ring_;
  t.order = order_;
  t.add = add_;
  t.action = action_;
  t.zero = zero_;
  for (const auto& c : components_) t.components.push_back(c.members());
  t.labels = labels_;
  return t;
}

Validated<GradedModule> validate_module(const ModuleTables& c) {
  Validated<GradedModule> result;
  auto& errors = result.errors;
  if (!c.ring) {
    errors.push_back({"MalformedTables", "module has no base ring", {}});
    return result;
  }
  const GradedRing& R = *c.ring;
  const std::size_t n = c.order;
  const std::size_t nr = R.order();
  if (n == 0) {
    errors.push_back({"MalformedTables", "module order must be positive", {}});
    return result;
  }
  if (!detail::check_square_table(c.add, n, "module addition", errors)) return result;
  if (c.action.size() != nr * n) {
    errors.push_back({"MalformedTables", "action table is not |R| x |M|", {}});
    return result;
  }
  for (std::size_t i = 0; i < c.action.size(); ++i) {
    if (c.action[i] >= n) {
      errors.push_back({"MalformedTables", "action table entry out of range",
                        {static_cast<Elem>(i / n), static_cast<Elem>(i % n), c.action[i]}});
      return result;
    }
  }
  auto zero = c.zero ? c.zero : detail::find_neutral(c.add, n);
  if (!zero || *zero >= n) {
    errors.push_back({"MissingIdentity", "module has no zero", {}});
    return result;
  }
  auto neg = detail::check_abelian_group(c.add, n, *zero, "module", errors);
  if (!neg) return result;

  auto add = [&](Elem a, Elem b) { return c.add[a * n + b]; };
  auto act = [&](Elem r, Elem m) { return c.action[r * n + m]; };

  for (Elem m = 0; m < n; ++m) {
    if (act(R.one(), m) != m) {
      errors.push_back({"UnitalAction", "1 m != m", {m}});
      break;
    }
  }
  bool dist_ok = true, assoc_ok = true;
  for (Elem r = 0; r < nr && (dist_ok || assoc_ok); ++r) {
    for (Elem s = 0; s < nr && (dist_ok || assoc_ok); ++s) {
      for (Elem m = 0; m < n; ++m) {
        if (dist_ok && act(R.add(r, s), m) != add(act(r, m), act(s, m))) {
          errors.push_back({"ScalarDistributivity", "(r+s)m != rm+sm", {r, s, m}});
          dist_ok = false;
        }
        if (assoc_ok && act(R.mul(r, s), m) != act(r, act(s, m))) {
          errors.push_back({"ActionAssociativity", "(rs)m != r(sm)", {r, s, m}});
          assoc_ok = false;
        }
      }
    }
  }
  bool ok = true;
  for (Elem r = 0; r < nr && ok; ++r) {
    for (Elem a = 0; a < n && ok; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (act(r, add(a, b)) != add(act(r, a), act(r, b))) {
          errors.push_back({"VectorDistributivity", "r(m+m') != rm+rm'", {r, a, b}});
          ok = false;
          break;
        }
      }
    }
  }
  if (!errors.empty()) return result;

  const GradingGroup& G = R.group();
  auto grading = detail::check_grading(c.add, n, *zero, G, c.components, "module", errors);
  if (!grading) return result;
  const auto& comps = grading->components;
  for (Degree g = 0; g < G.size() && errors.empty(); ++g) {
    for (Degree h = 0; h < G.size() && errors.empty(); ++h) {
      const Subset& target = comps[G.add(g, h)];
      for (Elem r : R.component(g)) {
        bool bad = false;
        for (Elem m : comps[h]) {
          if (!target.contains(act(r, m))) {
            errors.push_back({"GradingViolation",
                              "R_" + G.label(g) + " * M_" + G.label(h) + " not inside M_" + G.label(G.add(g, h)),
                              {static_cast<Elem>(g), static_cast<Elem>(h), r, m}});
            bad = true;
            break;
          }
        }
        if (bad) break;
      }
    }
  }
  if (!errors.empty()) return result;

  auto module = std::shared_ptr<GradedModule>(new GradedModule());
  module->ring_ = c.ring;
  module->order_ = n;
  module->zero_ = *zero;
  module->add_ = c.add;
  module->neg_ = std::move(*neg);
  module->action_ = c.action;
  module->components_ = std::move(grading->components);
  module->decomp_ = std::move(grading->decomp);
  module->degree_ = std::move(grading->degree);
  module->homogeneous_ = std::move(grading->homogeneous);
  module->labels_ = c.labels;
  result.value = std::move(module);
  return result;
}

ModulePtr make_module(const ModuleTables& candidate) {
  auto v = validate_module(candidate);
  if (!v.ok()) throw ValidationError(std::move(v.errors));
  return v.value;
}

ModulePtr self_module(const RingPtr& ring) {
  RingTables rt = ring->tables();
  ModuleTables t;
  t.ring = ring;
  t.order = rt.order;
  t.add = rt.add;
  t.action = rt.mul;
  t.zero = rt.zero;
  t.components = rt.components;
  t.labels = rt.labels;
  return make_module(t);
}

ModulePtr free_module(const RingPtr& ring, std::size_t rank) {
  const GradedRing& R = *ring;
  const std::size_t nr = R.order();
  std::size_t n = 1;
  for (std::size_t i = 0; i < rank; ++i) n *= nr;
  auto coords = [&](std::size_t x) {
    std::vector<Elem> c(rank);
    for (std::size_t i = 0; i < rank; ++i) {
      c[i] = static_cast<Elem>(x % nr);
      x /= nr;
    }
    return c;
  };
  auto index = [&](const std::vector<Elem>& c) {
    std::size_t x = 0;
    for (std::size_t i = rank; i-- > 0;) x = x * nr + c[i];
    return static_cast<Elem>(x);
  };
  ModuleTables t;
  t.ring = ring;
  t.order = n;
  t.add.resize(n * n);
  t.action.resize(nr * n);
  for (std::size_t a = 0; a < n; ++a) {
    auto ca = coords(a);
    for (std::size_t b = 0; b < n; ++b) {
      auto cb = coords(b);
      std::vector<Elem> s(rank);
      for (std::size_t i = 0; i < rank; ++i) s[i] = R.add(ca[i], cb[i]);
      t.add[a * n + b] = index(s);
    }
    for (Elem r = 0; r < nr; ++r) {
      std::vector<Elem> s(rank);
      for (std::size_t i = 0; i < rank; ++i) s[i] = R.mul(r, ca[i]);
      t.action[r * n + a] = index(s);
    }
  }
  t.zero = index(std::vector<Elem>(rank, R.zero()));
  t.components.assign(R.group().size(), {});
  t.labels.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    auto cx = coords(x);
    std::string label = "(";
    for (std::size_t i = 0; i < rank; ++i) label += (i ? "," : "") + R.label(cx[i]);
    t.labels[x] = label + ")";
    for (Degree g = 0; g < R.group().size(); ++g) {
      bool in = true;
      for (Elem ci : cx) in = in && R.component(g).contains(ci);
      if (in) t.components[g].push_back(static_cast<Elem>(x));
    }
  }
  return make_module(t);
}

ModulePtr zero_module(const RingPtr& ring) {
  ModuleTables t;
  t.ring = ring;
  t.order = 1;
  t.add = {0};
  t.action.assign(ring->order(), 0);
  t.zero = 0;
  return make_module(t);
}

ModulePtr direct_sum(const GradedModule& left, const GradedModule& right) {
  if (left.ring() != right.ring()) throw StructureMismatch("direct_sum: modules over different rings");
  const GradedRing& R = *left.ring();
  const std::size_t nl = left.order(), nrt = right.order(), n = nl * nrt;
  auto idx = [nl](Elem a, Elem b) { return static_cast<Elem>(a + nl * b); };
  ModuleTables t;
  t.ring = left.ring();
  t.order = n;
  t.add.resize(n * n);
  t.action.resize(R.order() * n);
  for (std::size_t u = 0; u < n; ++u) {
    const Elem ul = static_cast<Elem>(u % nl), ur = static_cast<Elem>(u / nl);
    for (std::size_t v = 0; v < n; ++v) {
      const Elem vl = static_cast<Elem>(v % nl), vr = static_cast<Elem>(v / nl);
      t.add[u * n + v] = idx(left.add(ul, vl), right.add(ur, vr));
    }
    for (Elem r = 0; r < R.order(); ++r) t.action[r * n + u] = idx(left.act(r, ul), right.act(r, ur));
  }
  t.zero = idx(left.zero(), right.zero());
  t.components.assign(R.group().size(), {});
  for (Degree g = 0; g < R.group().size(); ++g) {
    for (Elem a : left.component(g)) {
      for (Elem b : right.component(g)) t.components[g].push_back(idx(a, b));
    }
  }
  t.labels.resize(n);
  for (std::size_t u = 0; u < n; ++u) {
    t.labels[u] = "(" + left.label(static_cast<Elem>(u % nl)) + "," + right.label(static_cast<Elem>(u / nl)) + ")";
  }
  return make_module(t);
}

}  // namespace graded_lab
