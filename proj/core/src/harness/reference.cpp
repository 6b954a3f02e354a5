// Naive implementations used as an oracle: every predicate is a direct loop over the tables.
#include <algorithm>
#include <functional>
#include <stdexcept>

#include "graded_lab/harness/ops.hpp"

namespace graded_lab::harness::reference {

namespace {

// Fixed point of: 0, the seeds, sums, and scalar multiples.
Subset close_under(std::size_t n, Elem zero, const Subset& seeds, std::size_t scalars,
                   const std::function<Elem(Elem, Elem)>& add, const std::function<Elem(Elem, Elem)>& act) {
  Subset s = seeds;
  s.insert(zero);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Elem> cur = s.members();
    for (Elem a : cur) {
      for (Elem b : cur) {
        const Elem c = add(a, b);
        if (!s.contains(c)) {
          s.insert(c);
          grew = true;
        }
      }
      for (Elem r = 0; r < scalars; ++r) {
        const Elem c = act(r, a);
        if (!s.contains(c)) {
          s.insert(c);
          grew = true;
        }
      }
    }
  }
  (void)n;
  return s;
}

// Additive span of the homogeneous members equals the set.
bool spanned_by_homogeneous(std::size_t n, Elem zero, const Subset& s, const Subset& homogeneous,
                            const std::function<Elem(Elem, Elem)>& add) {
  Subset span(n, {zero});
  bool grew = true;
  const std::vector<Elem> gens = (s & homogeneous).members();
  while (grew) {
    grew = false;
    for (Elem a : span.members()) {
      for (Elem g : gens) {
        const Elem c = add(a, g);
        if (!span.contains(c)) {
          span.insert(c);
          grew = true;
        }
      }
    }
  }
  return span == s;
}

std::vector<Subset> enumerate(std::size_t n, const Subset& homogeneous,
                              const std::function<Subset(const Subset&)>& close) {
  if (n > kDefaultEnumerationBound) throw BudgetExceeded("carrier of order " + std::to_string(n) + " is too large");
  std::vector<Subset> found{close(Subset(n))};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (Elem h : homogeneous) {
      if (found[i].contains(h)) continue;
      Subset seeds = found[i];
      seeds.insert(h);
      Subset next = close(seeds);
      if (std::find(found.begin(), found.end(), next) == found.end()) found.push_back(std::move(next));
    }
  }
  std::sort(found.begin(), found.end(), canonical_less);
  return found;
}

}  // namespace

Subset submodule_closure(const GradedModule& m, const Subset& gens) {
  return close_under(
      m.order(), m.zero(), gens, m.ring()->order(), [&](Elem a, Elem b) { return m.add(a, b); },
      [&](Elem r, Elem x) { return m.act(r, x); });
}

Subset ideal_closure(const GradedRing& r, const Subset& gens) {
  return close_under(
      r.order(), r.zero(), gens, r.order(), [&](Elem a, Elem b) { return r.add(a, b); },
      [&](Elem x, Elem y) { return r.mul(x, y); });
}

bool is_ideal(const GradedRing& r, const Subset& s) {
  if (!s.contains(r.zero())) return false;
  for (Elem a : s) {
    for (Elem b : s) {
      if (!s.contains(r.add(a, b))) return false;
    }
    for (Elem x = 0; x < r.order(); ++x) {
      if (!s.contains(r.mul(x, a))) return false;
    }
  }
  return spanned_by_homogeneous(r.order(), r.zero(), s, r.homogeneous(), [&](Elem a, Elem b) { return r.add(a, b); });
}

bool is_submodule(const GradedModule& m, const Subset& s) {
  if (!s.contains(m.zero())) return false;
  for (Elem a : s) {
    for (Elem b : s) {
      if (!s.contains(m.add(a, b))) return false;
    }
    for (Elem x = 0; x < m.ring()->order(); ++x) {
      if (!s.contains(m.act(x, a))) return false;
    }
  }
  return spanned_by_homogeneous(m.order(), m.zero(), s, m.homogeneous(), [&](Elem a, Elem b) { return m.add(a, b); });
}

Subset colon_ring(const GradedModule& m, const Subset& n, const Subset& l) {
  const GradedRing& R = *m.ring();
  Subset out(R.order());
  for (Elem r = 0; r < R.order(); ++r) {
    bool inside = true;
    for (Elem x : l) {
      if (!n.contains(m.act(r, x))) {
        inside = false;
        break;
      }
    }
    if (inside) out.insert(r);
  }
  return out;
}

Flags flags(const GradedModule& m, const Subset& n) {
  const GradedRing& R = *m.ring();
  Flags f;
  f.gw = Subset(R.order());
  f.g = Subset(R.order());
  f.w = Subset(R.order());
  f.gw_witness.assign(R.order(), std::nullopt);
  for (Elem x = 0; x < R.order(); ++x) {
    for (Elem y = 0; y < m.order(); ++y) {
      if (n.contains(y)) continue;
      const Elem xy = m.act(x, y);
      if (!n.contains(xy)) continue;
      const bool hom = R.is_homogeneous(x) && m.is_homogeneous(y);
      if (xy != m.zero()) {
        f.w.insert(x);
        if (hom && !f.gw.contains(x)) {
          f.gw.insert(x);
          f.gw_witness[x] = y;
        }
      }
      if (hom) f.g.insert(x);
    }
  }
  f.weakly_primal = is_ideal(R, f.adjoint(R.zero()));
  Subset g0 = f.g;
  g0.insert(R.zero());
  f.primal = is_ideal(R, g0);

  const Subset colon = colon_ring(m, n, m.all());
  f.weakly_prime = n.size() != m.order();
  f.weakly_primary = true;
  for (Elem x : R.homogeneous()) {
    bool power_in_colon = false;
    Elem p = x;
    for (std::size_t k = 0; k < R.order() && !power_in_colon; ++k) {
      power_in_colon = colon.contains(p);
      p = R.mul(p, x);
    }
    for (Elem y : m.homogeneous()) {
      const Elem xy = m.act(x, y);
      if (xy == m.zero() || !n.contains(xy) || n.contains(y)) continue;
      if (!colon.contains(x)) f.weakly_prime = false;
      if (!power_in_colon) f.weakly_primary = false;
    }
  }
  return f;
}

Subset gw_ideal(const GradedRing& r, const Subset& p) {
  Subset out(r.order());
  for (Elem x : r.homogeneous()) {
    for (Elem y : r.homogeneous()) {
      const Elem xy = r.mul(x, y);
      if (!p.contains(y) && xy != r.zero() && p.contains(xy)) {
        out.insert(x);
        break;
      }
    }
  }
  return out;
}

bool weakly_prime_ideal(const GradedRing& r, const Subset& p) {
  for (Elem x : r.homogeneous()) {
    for (Elem y : r.homogeneous()) {
      const Elem xy = r.mul(x, y);
      if (xy != r.zero() && p.contains(xy) && !p.contains(x) && !p.contains(y)) return false;
    }
  }
  return true;
}

bool characterization(const GradedModule& m, const Subset& n, const Subset& p) {
  const GradedRing& R = *m.ring();
  if (!is_ideal(R, p)) return false;
  for (Elem s : R.homogeneous()) {
    bool inside = true;
    for (Elem y : m.homogeneous()) {
      const Elem sy = m.act(s, y);
      if (n.contains(sy) && !n.contains(y) && sy != m.zero()) {
        inside = false;
        break;
      }
    }
    const bool in_p_star = p.contains(s) && s != R.zero();
    if (in_p_star == inside) return false;
  }
  return true;
}

Subset ideal_times(const GradedModule& m, const Subset& ideal, const Subset& n) {
  const GradedRing& R = *m.ring();
  Subset gens(m.order());
  for (Elem a : ideal) {
    if (!R.is_homogeneous(a)) continue;
    for (Elem x : n) {
      if (m.is_homogeneous(x)) gens.insert(m.act(a, x));
    }
  }
  return submodule_closure(m, gens);
}

Subset ideal_product(const GradedRing& r, const Subset& a, const Subset& b) {
  Subset gens(r.order());
  for (Elem x : a) {
    if (!r.is_homogeneous(x)) continue;
    for (Elem y : b) {
      if (r.is_homogeneous(y)) gens.insert(r.mul(x, y));
    }
  }
  return ideal_closure(r, gens);
}

std::vector<Subset> submodules(const GradedModule& m) {
  return enumerate(m.order(), m.homogeneous(), [&](const Subset& s) { return submodule_closure(m, s); });
}

std::vector<Subset> ideals(const GradedRing& r) {
  return enumerate(r.order(), r.homogeneous(), [&](const Subset& s) { return ideal_closure(r, s); });
}

bool is_multiplication(const GradedModule& m) {
  for (const Subset& n : submodules(m)) {
    if (ideal_times(m, colon_ring(m, n, m.all()), m.all()) != n) return false;
  }
  return true;
}

namespace {

template <typename Visit>
bool tuples(std::size_t len, std::size_t count, std::vector<std::size_t>& cur, std::size_t start, Visit&& visit) {
  if (cur.size() == len) return visit(cur);
  for (std::size_t i = start; i < count; ++i) {
    cur.push_back(i);
    if (tuples(len, count, cur, i, visit)) return true;
    cur.pop_back();
  }
  return false;
}

std::vector<Subset> factor_candidates(const GradedRing& r, FactorConvention c) {
  std::vector<Subset> out;
  for (const Subset& p : ideals(r)) {
    if (c == FactorConvention::ProperIdeals && p.size() == r.order()) continue;
    Subset gw0 = gw_ideal(r, p);
    gw0.insert(r.zero());
    if (is_ideal(r, gw0)) out.push_back(p);
  }
  return out;
}

}  // namespace

std::optional<Factorization> find_ideal_factorization(const RingPtr& ring, const Subset& target, std::size_t max_len,
                                                      FactorConvention c) {
  const GradedRing& r = *ring;
  if (c == FactorConvention::ProperIdeals && target.size() == r.order()) return Factorization{{}, std::nullopt, target};
  const std::vector<Subset> cands = factor_candidates(r, c);
  std::optional<Factorization> found;
  for (std::size_t len = 1; len <= max_len && !found; ++len) {
    std::vector<std::size_t> cur;
    tuples(len, cands.size(), cur, 0, [&](const std::vector<std::size_t>& t) {
      Subset acc = r.all();
      for (std::size_t i : t) acc = ideal_product(r, acc, cands[i]);
      if (acc != target) return false;
      Factorization f;
      for (std::size_t i : t) f.factors.push_back(cands[i]);
      f.target = target;
      found = std::move(f);
      return true;
    });
  }
  return found;
}

std::optional<Factorization> find_factorization(const ModulePtr& module, const Subset& target, std::size_t max_len,
                                                FactorConvention c) {
  const GradedModule& m = *module;
  const GradedRing& r = *m.ring();
  const std::vector<Subset> cands = factor_candidates(r, c);
  std::vector<Subset> tails;
  for (const Subset& n : submodules(m)) {
    if (flags(m, n).weakly_primal) tails.push_back(n);
  }
  std::optional<Factorization> found;
  for (std::size_t len = 0; len <= max_len && !found; ++len) {
    std::vector<std::size_t> cur;
    tuples(len, cands.size(), cur, 0, [&](const std::vector<std::size_t>& t) {
      Subset acc = r.all();
      for (std::size_t i : t) acc = ideal_product(r, acc, cands[i]);
      for (const Subset& tail : tails) {
        if (ideal_times(m, acc, tail) != target) continue;
        Factorization f;
        for (std::size_t i : t) f.factors.push_back(cands[i]);
        f.tail = tail;
        f.target = target;
        found = std::move(f);
        return true;
      }
      return false;
    });
  }
  return found;
}

std::shared_ptr<const LocalView> localize(const ModulePtr& module, const Subset& s) {
  const GradedModule& M = *module;
  const RingPtr& ring = M.ring();
  const GradedRing& R = *ring;
  auto v = std::make_shared<LocalView>();
  v->base_ring = ring;
  v->base_module = module;
  v->denominators = s.members();
  v->den_index.assign(R.order(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < v->denominators.size(); ++i) v->den_index[v->denominators[i]] = i;
  const std::size_t k = v->denominators.size();
  const auto& dens = v->denominators;

  // Classes by scanning pairs in lexicographic order against the definition.
  auto partition = [&](std::size_t n, const std::function<bool(Elem, Elem, Elem, Elem)>& related,
                       std::vector<Elem>& cls, std::vector<FractionPair>& reps) {
    const Elem none = static_cast<Elem>(-1);
    cls.assign(n * k, none);
    for (std::size_t p = 0; p < n * k; ++p) {
      if (cls[p] != none) continue;
      const Elem c = static_cast<Elem>(reps.size());
      reps.emplace_back(static_cast<Elem>(p / k), dens[p % k]);
      for (std::size_t q = p; q < n * k; ++q) {
        if (cls[q] == none && related(static_cast<Elem>(p / k), dens[p % k], static_cast<Elem>(q / k), dens[q % k])) {
          cls[q] = c;
        }
      }
    }
    for (std::size_t p = 0; p < n * k; ++p) {
      for (std::size_t q = 0; q < n * k; ++q) {
        const bool rel = related(static_cast<Elem>(p / k), dens[p % k], static_cast<Elem>(q / k), dens[q % k]);
        if (rel != (cls[p] == cls[q])) {
          v->equivalence_ok = false;
          v->equivalence_detail = "pairs " + std::to_string(p) + " and " + std::to_string(q);
          return;
        }
      }
    }
  };
  partition(R.order(), [&](Elem a, Elem u, Elem b, Elem t) {
    const Elem d = R.sub(R.mul(a, t), R.mul(b, u));
    for (Elem w : dens) {
      if (R.mul(w, d) == R.zero()) return true;
    }
    return false;
  }, v->ring_class, v->ring_rep);
  partition(M.order(), [&](Elem a, Elem u, Elem b, Elem t) {
    const Elem d = M.sub(M.act(t, a), M.act(u, b));
    for (Elem w : dens) {
      if (M.act(w, d) == M.zero()) return true;
    }
    return false;
  }, v->module_class, v->module_rep);

  const std::size_t cr = v->ring_rep.size(), cm = v->module_rep.size();
  RingTables rt;
  rt.order = cr;
  rt.add.resize(cr * cr);
  rt.mul.resize(cr * cr);
  for (Elem x = 0; x < cr; ++x) {
    for (Elem y = 0; y < cr; ++y) {
      const auto [a, u] = v->ring_rep[x];
      const auto [b, t] = v->ring_rep[y];
      rt.add[x * cr + y] = v->ring_class_of(R.add(R.mul(a, t), R.mul(b, u)), R.mul(u, t));
      rt.mul[x * cr + y] = v->ring_class_of(R.mul(a, b), R.mul(u, t));
    }
  }
  rt.zero = v->ring_class_of(R.zero(), R.one());
  rt.one = v->ring_class_of(R.one(), R.one());
  rt.group = R.group();
  rt.components.assign(R.group().size(), {});
  ModuleTables mt;
  mt.order = cm;
  mt.add.resize(cm * cm);
  mt.action.resize(cr * cm);
  mt.components.assign(R.group().size(), {});
  for (Degree g = 0; g < R.group().size(); ++g) {
    Subset rc(cr), mc(cm);
    for (Elem u : dens) {
      const Degree du = *R.degree(u);
      for (Elem a : R.homogeneous()) {
        if (R.degree(a) && R.group().subtract(*R.degree(a), du) == g) rc.insert(v->ring_class_of(a, u));
      }
      for (Elem a : M.homogeneous()) {
        if (M.degree(a) && R.group().subtract(*M.degree(a), du) == g) mc.insert(v->module_class_of(a, u));
      }
    }
    rc.insert(*rt.zero);
    mc.insert(v->module_class_of(M.zero(), R.one()));
    rt.components[g] = rc.members();
    mt.components[g] = mc.members();
  }
  v->ring = make_ring(rt);
  for (Elem x = 0; x < cm; ++x) {
    for (Elem y = 0; y < cm; ++y) {
      const auto [a, u] = v->module_rep[x];
      const auto [b, t] = v->module_rep[y];
      mt.add[x * cm + y] = v->module_class_of(M.add(M.act(t, a), M.act(u, b)), R.mul(u, t));
    }
  }
  for (Elem x = 0; x < cr; ++x) {
    for (Elem y = 0; y < cm; ++y) {
      const auto [a, u] = v->ring_rep[x];
      const auto [b, t] = v->module_rep[y];
      mt.action[x * cm + y] = v->module_class_of(M.act(a, b), R.mul(u, t));
    }
  }
  mt.ring = v->ring;
  mt.zero = v->module_class_of(M.zero(), R.one());
  v->module = make_module(mt);

  const GradedRing& RS = *v->ring;
  const GradedModule& MS = *v->module;
  auto fail = [&](std::string why) {
    if (v->phi_ok) {
      v->phi_ok = false;
      v->phi_detail = std::move(why);
    }
  };
  for (Elem a = 0; a < R.order(); ++a) {
    for (Elem b = 0; b < R.order(); ++b) {
      if (v->phi_ring(R.add(a, b)) != RS.add(v->phi_ring(a), v->phi_ring(b))) fail("ring phi not additive");
      if (v->phi_ring(R.mul(a, b)) != RS.mul(v->phi_ring(a), v->phi_ring(b))) fail("ring phi not multiplicative");
    }
    if (R.degree(a) && R.is_homogeneous(a) && !RS.component(*R.degree(a)).contains(v->phi_ring(a))) {
      fail("ring phi changes a degree");
    }
  }
  for (Elem a = 0; a < M.order(); ++a) {
    for (Elem b = 0; b < M.order(); ++b) {
      if (v->phi_module(M.add(a, b)) != MS.add(v->phi_module(a), v->phi_module(b))) fail("module phi not additive");
    }
    for (Elem r = 0; r < R.order(); ++r) {
      if (v->phi_module(M.act(r, a)) != MS.act(v->phi_ring(r), v->phi_module(a))) fail("module phi not linear");
    }
    if (M.degree(a) && M.is_homogeneous(a) && !MS.component(*M.degree(a)).contains(v->phi_module(a))) {
      fail("module phi changes a degree");
    }
  }
  if (v->phi_ring(R.one()) != RS.one()) fail("phi(1) != 1");
  return v;
}

namespace {

long mod(long a, long m) { return ((a % m) + m) % m; }

class WindowIntegerOracle final : public IntegerOracle {
 public:
  explicit WindowIntegerOracle(long m) : m_(m) {}
  long modulus() const override { return m_; }
  std::optional<long> ngwp_witness(long x) const override {
    for (long y = -4 * m_; y <= 4 * m_; ++y) {
      if (mod(y, m_) != 0 && x * y != 0 && mod(x * y, m_) == 0) return y;
    }
    return std::nullopt;
  }
  bool in_gw(long x) const override { return ngwp_witness(x).has_value(); }
  bool in_g(long x) const override {
    for (long y = -4 * m_; y <= 4 * m_; ++y) {
      if (mod(y, m_) != 0 && mod(x * y, m_) == 0) return true;
    }
    return false;
  }
  bool in_w(long x) const override { return in_gw(x); }
  bool weakly_primal() const override { return closed([&](long x) { return x == 0 || in_gw(x); }); }
  bool primal() const override { return closed([&](long x) { return x == 0 || in_g(x); }); }
  bool weakly_prime() const override { return m_ != 1 && condition(false); }
  bool weakly_primary() const override { return condition(true); }

 private:
  // An ideal of Z, judged on [-2m, 2m]: closed under sums and integer multiples.
  template <typename In>
  bool closed(In in) const {
    const long w = 2 * m_;
    for (long x = -w; x <= w; ++x) {
      if (!in(x)) continue;
      for (long y = -w; y <= w; ++y) {
        if (in(y) && !in(x + y)) return false;
        if (!in(x * y)) return false;
      }
    }
    return true;
  }
  bool condition(bool primary) const {
    const long w = 2 * m_;
    for (long x = -w; x <= w; ++x) {
      for (long y = -4 * m_; y <= 4 * m_; ++y) {
        if (mod(y, m_) == 0 || x * y == 0 || mod(x * y, m_) != 0) continue;
        bool ok = mod(x, m_) == 0;
        if (primary) {
          long p = mod(x, m_);
          for (long k = 0; k < m_ && !ok; ++k) {
            ok = p == 0;
            p = mod(p * x, m_);
          }
        }
        if (!ok) return false;
      }
    }
    return true;
  }
  long m_;
};

}  // namespace

std::shared_ptr<const IntegerOracle> integer_oracle(long m) {
  if (m < 1) throw std::invalid_argument("modulus must be positive");
  return std::make_shared<WindowIntegerOracle>(m);
}

bool ZnOracle::in_n(long m) const { return mod(m, n) % d == 0; }

bool ZnOracle::in_gw(long x) const {
  for (long m = 0; m < n; ++m) {
    const long xm = mod(x * m, n);
    if (!in_n(m) && xm != 0 && in_n(xm)) return true;
  }
  return false;
}

bool ZnOracle::in_g(long x) const {
  for (long m = 0; m < n; ++m) {
    if (!in_n(m) && in_n(x * m)) return true;
  }
  return false;
}

bool ZnOracle::in_w(long x) const { return in_gw(x); }

bool ZnOracle::in_colon(long x) const {
  for (long m = 0; m < n; ++m) {
    if (!in_n(x * m)) return false;
  }
  return true;
}

namespace {

template <typename In>
bool z_ideal_on_window(long w, In in) {
  for (long x = -w; x <= w; ++x) {
    if (!in(x)) continue;
    for (long y = -w; y <= w; ++y) {
      if (in(y) && !in(x + y)) return false;
      if (!in(x * y)) return false;
    }
  }
  return true;
}

}  // namespace

bool ZnOracle::weakly_primal() const {
  return z_ideal_on_window(2 * n, [&](long x) { return x == 0 || in_gw(x); });
}

bool ZnOracle::primal() const {
  return z_ideal_on_window(2 * n, [&](long x) { return x == 0 || in_g(x); });
}

bool ZnOracle::weakly_prime() const {
  if (d == 1) return false;
  for (long x = -4 * n; x <= 4 * n; ++x) {
    for (long m = 0; m < n; ++m) {
      const long xm = mod(x * m, n);
      if (xm != 0 && in_n(xm) && !in_n(m) && !in_colon(x)) return false;
    }
  }
  return true;
}

bool ZnOracle::weakly_primary() const {
  for (long x = -4 * n; x <= 4 * n; ++x) {
    bool power = false;
    long p = mod(x, n);
    for (long k = 0; k < n && !power; ++k) {
      power = in_colon(p);
      p = mod(p * x, n);
    }
    for (long m = 0; m < n; ++m) {
      const long xm = mod(x * m, n);
      if (xm != 0 && in_n(xm) && !in_n(m) && !power) return false;
    }
  }
  return true;
}

}  // namespace graded_lab::harness::reference
