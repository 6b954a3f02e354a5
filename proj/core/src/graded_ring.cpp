#include "graded_lab/graded_ring.hpp"

#include <sstream>

#include "table_checks.hpp"

namespace graded_lab {

namespace {

std::string join_violations(const std::vector<Violation>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << "; ";
    os << v[i].axiom << ": " << v[i].detail;
  }
  return os.str();
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : std::runtime_error(join_violations(violations)), violations_(std::move(violations)) {}

Elem GradedRing::power(Elem x, std::size_t k) const {
  Elem r = one_;
  for (std::size_t i = 0; i < k; ++i) r = mul(r, x);
  return r;
}

std::string GradedRing::label(Elem x) const {
  if (x < labels_.size()) return labels_[x];
  return std::to_string(x);
}

RingTables GradedRing::tables() const {
  RingTables t;
  t.order = order_;
  t.add = add_;
  t.mul = mul_;
  t.zero = zero_;
  t.one = one_;
  t.group = group_;
  for (const auto& c : components_) t.components.push_back(c.members());
  t.labels = labels_;
  return t;
}

Validated<GradedRing> validate_ring(const RingTables& c) {
  using detail::at;
  Validated<GradedRing> result;
  auto& errors = result.errors;
  const std::size_t n = c.order;
  if (n == 0) {
    errors.push_back({"MalformedTables", "ring order must be positive", {}});
    return result;
  }
  if (!detail::check_square_table(c.add, n, "addition", errors) ||
      !detail::check_square_table(c.mul, n, "multiplication", errors)) {
    return result;
  }
  auto zero = c.zero ? c.zero : detail::find_neutral(c.add, n);
  auto one = c.one ? c.one : detail::find_neutral(c.mul, n);
  if (!zero || *zero >= n) {
    errors.push_back({"MissingIdentity", "no additive identity", {}});
    return result;
  }
  if (!one || *one >= n) {
    errors.push_back({"MissingIdentity", "no multiplicative identity", {}});
    return result;
  }
  auto neg = detail::check_abelian_group(c.add, n, *zero, "ring", errors);

  for (Elem x = 0; x < n; ++x) {
    if (at(c.mul, n, *one, x) != x || at(c.mul, n, x, *one) != x) {
      errors.push_back({"MissingIdentity", "one is not multiplicatively neutral", {*one, x}});
      break;
    }
  }
  bool ok = true;
  for (Elem a = 0; a < n && ok; ++a) {
    for (Elem b = a + 1; b < n; ++b) {
      if (at(c.mul, n, a, b) != at(c.mul, n, b, a)) {
        errors.push_back({"NonCommutative", "multiplication is not commutative", {a, b}});
        ok = false;
        break;
      }
    }
  }
  ok = true;
  for (Elem a = 0; a < n && ok; ++a) {
    for (Elem b = 0; b < n && ok; ++b) {
      const Elem ab = at(c.mul, n, a, b);
      for (Elem d = 0; d < n; ++d) {
        if (at(c.mul, n, ab, d) != at(c.mul, n, a, at(c.mul, n, b, d))) {
          errors.push_back({"NonAssociative", "multiplication is not associative", {a, b, d}});
          ok = false;
          break;
        }
      }
    }
  }
  ok = true;
  for (Elem a = 0; a < n && ok; ++a) {
    for (Elem b = 0; b < n && ok; ++b) {
      for (Elem d = 0; d < n; ++d) {
        if (at(c.mul, n, a, at(c.add, n, b, d)) != at(c.add, n, at(c.mul, n, a, b), at(c.mul, n, a, d))) {
          errors.push_back({"NonDistributive", "a(b+c) != ab+ac", {a, b, d}});
          ok = false;
          break;
        }
      }
    }
  }
  if (!errors.empty() || !neg) return result;

  auto grading = detail::check_grading(c.add, n, *zero, c.group, c.components, "ring", errors);
  if (!grading) return result;

  const auto& comps = grading->components;
  const std::size_t k = c.group.size();
  for (Degree g = 0; g < k && errors.empty(); ++g) {
    for (Degree h = 0; h < k && errors.empty(); ++h) {
      const Subset& target = comps[c.group.add(g, h)];
      for (Elem x : comps[g]) {
        bool bad = false;
        for (Elem y : comps[h]) {
          if (!target.contains(at(c.mul, n, x, y))) {
            errors.push_back({"GradingViolation",
                              "R_" + c.group.label(g) + " * R_" + c.group.label(h) + " not inside R_" +
                                  c.group.label(c.group.add(g, h)),
                              {static_cast<Elem>(g), static_cast<Elem>(h), x, y}});
            bad = true;
            break;
          }
        }
        if (bad) break;
      }
    }
  }
  if (!errors.empty()) return result;

  const Subset& re = comps[c.group.identity()];
  if (!re.contains(*one)) {
    result.warnings.push_back({"IdentityNotHomogeneous", "1 does not lie in R_e", {*one}});
  }
  for (Elem a : re) {
    bool bad = false;
    for (Elem b : re) {
      if (!re.contains(at(c.mul, n, a, b))) {
        result.warnings.push_back({"IdentityComponentNotSubring", "R_e is not closed under products", {a, b}});
        bad = true;
        break;
      }
    }
    if (bad) break;
  }

  auto ring = std::shared_ptr<GradedRing>(new GradedRing());
  ring->order_ = n;
  ring->zero_ = *zero;
  ring->one_ = *one;
  ring->add_ = c.add;
  ring->mul_ = c.mul;
  ring->neg_ = std::move(*neg);
  ring->group_ = c.group;
  ring->components_ = std::move(grading->components);
  ring->decomp_ = std::move(grading->decomp);
  ring->degree_ = std::move(grading->degree);
  ring->homogeneous_ = std::move(grading->homogeneous);
  ring->warnings_ = result.warnings;
  ring->labels_ = c.labels;
  result.value = std::move(ring);
  return result;
}

RingPtr make_ring(const RingTables& candidate) {
  auto v = validate_ring(candidate);
  if (!v.ok()) throw ValidationError(std::move(v.errors));
  return v.value;
}

Subset homogeneous_elements(const GradedRing& ring) { return ring.homogeneous(); }

RingPtr make_Zn(std::size_t n) {
  if (n == 0) throw std::invalid_argument("make_Zn: n must be positive");
  RingTables t;
  t.order = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      t.add[a * n + b] = static_cast<Elem>((a + b) % n);
      t.mul[a * n + b] = static_cast<Elem>((a * b) % n);
    }
  }
  t.zero = 0;
  t.one = static_cast<Elem>(1 % n);
  t.group = GradingGroup::trivial();
  t.components = {{}};
  for (std::size_t a = 0; a < n; ++a) t.components[0].push_back(static_cast<Elem>(a));
  return make_ring(t);
}

RingTables quadratic_tables(std::size_t n, std::size_t a) {
  if (n < 1) throw std::invalid_argument("make_quadratic: n must be positive");
  a %= n;
  const std::size_t order = n * n;
  RingTables t;
  t.order = order;
  t.add.resize(order * order);
  t.mul.resize(order * order);
  for (std::size_t u = 0; u < order; ++u) {
    const std::size_t u0 = u % n, u1 = u / n;
    for (std::size_t v = 0; v < order; ++v) {
      const std::size_t v0 = v % n, v1 = v / n;
      const std::size_t s0 = (u0 + v0) % n, s1 = (u1 + v1) % n;
      const std::size_t p0 = (u0 * v0 + a * u1 * v1) % n;
      const std::size_t p1 = (u0 * v1 + u1 * v0) % n;
      t.add[u * order + v] = static_cast<Elem>(s0 + n * s1);
      t.mul[u * order + v] = static_cast<Elem>(p0 + n * p1);
    }
  }
  t.zero = 0;
  t.one = static_cast<Elem>(1 % n);
  t.group = GradingGroup::cyclic(2);
  t.components.assign(2, {});
  for (std::size_t c = 0; c < n; ++c) {
    t.components[0].push_back(static_cast<Elem>(c));
    t.components[1].push_back(static_cast<Elem>(n * c));
  }
  t.labels.resize(order);
  for (std::size_t u = 0; u < order; ++u) {
    const std::size_t u0 = u % n, u1 = u / n;
    std::string s;
    if (u1 == 0) {
      s = std::to_string(u0);
    } else {
      std::string xs = u1 == 1 ? "x" : std::to_string(u1) + "x";
      s = u0 == 0 ? xs : std::to_string(u0) + "+" + xs;
    }
    t.labels[u] = s;
  }
  return t;
}

RingPtr make_quadratic(std::size_t n, std::size_t a) { return make_ring(quadratic_tables(n, a)); }

RingPtr make_product(const GradedRing& left, const GradedRing& right) {
  if (!(left.group() == right.group())) throw StructureMismatch("make_product: grading groups differ");
  const std::size_t nl = left.order(), nr = right.order(), n = nl * nr;
  RingTables t;
  t.order = n;
  t.add.resize(n * n);
  t.mul.resize(n * n);
  auto idx = [nl](Elem l, Elem r) { return static_cast<Elem>(l + nl * r); };
  for (std::size_t u = 0; u < n; ++u) {
    const Elem ul = static_cast<Elem>(u % nl), ur = static_cast<Elem>(u / nl);
    for (std::size_t v = 0; v < n; ++v) {
      const Elem vl = static_cast<Elem>(v % nl), vr = static_cast<Elem>(v / nl);
      t.add[u * n + v] = idx(left.add(ul, vl), right.add(ur, vr));
      t.mul[u * n + v] = idx(left.mul(ul, vl), right.mul(ur, vr));
    }
  }
  t.zero = idx(left.zero(), right.zero());
  t.one = idx(left.one(), right.one());
  t.group = left.group();
  t.components.assign(t.group.size(), {});
  for (Degree g = 0; g < t.group.size(); ++g) {
    for (Elem l : left.component(g)) {
      for (Elem r : right.component(g)) t.components[g].push_back(idx(l, r));
    }
  }
  t.labels.resize(n);
  for (std::size_t u = 0; u < n; ++u) {
    t.labels[u] = "(" + left.label(static_cast<Elem>(u % nl)) + "," + right.label(static_cast<Elem>(u / nl)) + ")";
  }
  return make_ring(t);
}

}  // namespace graded_lab
