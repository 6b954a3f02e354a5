#include "graded_lab/harness/certificate.hpp"

#include <functional>
#include <stdexcept>

namespace graded_lab::harness {

CertificateBuilder::CertificateBuilder(std::string claim, Json instance) {
  doc_["claim"] = std::move(claim);
  doc_["instance"] = std::move(instance);
  doc_["sets"] = Json::object();
  doc_["facts"] = Json::array();
}

std::string CertificateBuilder::add_set(const std::string& name, const std::string& kind, const std::string& context,
                                        Json members) {
  Json entry;
  entry["kind"] = kind;
  entry["context"] = context;
  entry["members"] = std::move(members);
  doc_["sets"][name] = std::move(entry);
  return name;
}

std::string CertificateBuilder::ring_set(const std::string& name, const Subset& s) {
  return add_set(name, "ring", "base", s.members());
}

std::string CertificateBuilder::module_set(const std::string& name, const Subset& s) {
  return add_set(name, "module", "base", s.members());
}

void CertificateBuilder::localize(const Subset& s, const LocalView& view) {
  view_ = &view;
  doc_["localization"]["s"] = s.members();
  ring_set("S", s);
}

Json CertificateBuilder::local_ring_elem(Elem cls) const {
  const auto [a, s] = view_->ring_rep.at(cls);
  return Json::array({a, s});
}

Json CertificateBuilder::local_module_elem(Elem cls) const {
  const auto [m, s] = view_->module_rep.at(cls);
  return Json::array({m, s});
}

std::string CertificateBuilder::local_ring_set(const std::string& name, const Subset& s) {
  Json pairs = Json::array();
  for (Elem c : s) pairs.push_back(local_ring_elem(c));
  return add_set(name, "ring", "local", std::move(pairs));
}

std::string CertificateBuilder::local_module_set(const std::string& name, const Subset& s) {
  Json pairs = Json::array();
  for (Elem c : s) pairs.push_back(local_module_elem(c));
  return add_set(name, "module", "local", std::move(pairs));
}

void CertificateBuilder::fact(const std::string& pred, Json args, bool expect, const std::string& context) {
  Json f;
  f["pred"] = pred;
  f["args"] = args.is_null() ? Json::object() : std::move(args);
  f["expect"] = expect;
  f["context"] = context;
  doc_["facts"].push_back(std::move(f));
}

namespace {

class Malformed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NamedSet {
  bool local = false;
  bool ring = true;
  Subset members;
};

class Verifier {
 public:
  explicit Verifier(const Json& cert) : cert_(cert) {
    try {
      inst_ = build_instance(cert.at("instance"));
    } catch (const std::exception& e) {
      throw StaleDescriptor(std::string("instance does not rebuild: ") + e.what());
    }
    if (inst_.is_integer()) integer_ = reference::integer_oracle(*inst_.integer_modulus);
    if (cert.contains("localization")) {
      try {
        Subset s(inst_.ring->order());
        for (const auto& e : cert.at("localization").at("s")) s.insert(e.get<Elem>());
        local_ = reference::localize(inst_.module, s);
      } catch (const std::exception& e) {
        throw StaleDescriptor(std::string("localization does not rebuild: ") + e.what());
      }
    }
  }

  VerifyResult run() {
    VerifyResult out;
    for (const auto& f : cert_.at("facts")) {
      ++out.facts;
      const std::string pred = f.at("pred").get<std::string>();
      const bool expect = f.at("expect").get<bool>();
      try {
        context_ = f.value("context", std::string("base"));
        if (context_ == "local" && !local_) throw Malformed("local fact without a localization");
        const bool got = eval(pred, f.at("args"));
        if (got != expect) {
          out.ok = false;
          out.failures.push_back(pred + " " + f.at("args").dump() + " is " + (got ? "true" : "false"));
        }
      } catch (const std::exception& e) {
        out.ok = false;
        out.failures.push_back(pred + ": " + e.what());
      }
    }
    return out;
  }

 private:
  const GradedRing& ring() const { return context_ == "local" ? *local_->ring : *inst_.ring; }
  const GradedModule& module() const { return context_ == "local" ? *local_->module : *inst_.module; }
  const ModulePtr& module_ptr() const { return context_ == "local" ? local_->module : inst_.module; }
  const RingPtr& ring_ptr() const { return context_ == "local" ? local_->ring : inst_.ring; }

  NamedSet set(const Json& args, const char* key) const {
    const std::string name = args.at(key).get<std::string>();
    const Json& entry = cert_.at("sets").at(name);
    NamedSet out;
    out.local = entry.at("context").get<std::string>() == "local";
    out.ring = entry.at("kind").get<std::string>() == "ring";
    if (out.local && !local_) throw Malformed("local set without a localization");
    const std::size_t universe = out.local ? (out.ring ? local_->ring->order() : local_->module->order())
                                           : (out.ring ? inst_.ring->order() : inst_.module->order());
    out.members = Subset(universe);
    for (const auto& e : entry.at("members")) out.members.insert(elem(e, out.local, out.ring, universe));
    return out;
  }

  Elem elem(const Json& e, bool local, bool ring, std::size_t universe) const {
    if (local) {
      const Elem num = e.at(0).get<Elem>(), den = e.at(1).get<Elem>();
      if (den >= local_->den_index.size() || local_->den_index[den] == static_cast<std::size_t>(-1)) {
        throw Malformed("denominator outside S");
      }
      const std::size_t base = ring ? inst_.ring->order() : inst_.module->order();
      if (num >= base) throw Malformed("numerator out of range");
      return ring ? local_->ring_class_of(num, den) : local_->module_class_of(num, den);
    }
    const Elem x = e.get<Elem>();
    if (x >= universe) throw Malformed("element out of range");
    return x;
  }
  Elem relem(const Json& args, const char* key) const {
    return elem(args.at(key), context_ == "local", true, ring().order());
  }
  Elem melem(const Json& args, const char* key) const {
    return elem(args.at(key), context_ == "local", false, module().order());
  }

  bool in_gw(Elem x, const Subset& n) const {
    const GradedModule& M = module();
    if (!M.ring()->is_homogeneous(x)) return false;
    for (Elem m : M.homogeneous()) {
      const Elem xm = M.act(x, m);
      if (!n.contains(m) && xm != M.zero() && n.contains(xm)) return true;
    }
    return false;
  }

  static FactorConvention convention(const Json& args) {
    const std::string c = args.at("convention").get<std::string>();
    if (c == "any-ideal") return FactorConvention::AnyIdeal;
    if (c == "proper-ideals") return FactorConvention::ProperIdeals;
    throw Malformed("unknown convention '" + c + "'");
  }

  bool eval(const std::string& pred, const Json& a) {
    if (context_ == "integer") return eval_integer(pred, a);
    const GradedRing& R = ring();
    const GradedModule& M = module();
    if (pred == "member") {
      const NamedSet s = set(a, "A");
      return s.members.contains(elem(a.at("x"), s.local, s.ring, s.members.universe()));
    }
    if (pred == "homogeneous") return R.is_homogeneous(relem(a, "x"));
    if (pred == "module_homogeneous") return M.is_homogeneous(melem(a, "m"));
    if (pred == "sum_in" || pred == "scalar_in") {
      const NamedSet s = set(a, "A");
      if (pred == "sum_in") {
        const Elem x = elem(a.at("a"), s.local, s.ring, s.members.universe());
        const Elem y = elem(a.at("b"), s.local, s.ring, s.members.universe());
        return s.members.contains(s.ring ? R.add(x, y) : M.add(x, y));
      }
      const Elem r = relem(a, "r");
      const Elem x = elem(a.at("a"), s.local, s.ring, s.members.universe());
      return s.members.contains(s.ring ? R.mul(r, x) : M.act(r, x));
    }
    if (pred == "ngwp_witness" || pred == "not_prime_witness" || pred == "nwp_witness") {
      const Elem x = relem(a, "x"), m = melem(a, "m");
      const Subset n = set(a, "N").members;
      const Elem xm = M.act(x, m);
      const bool base = !n.contains(m) && n.contains(xm);
      if (pred == "nwp_witness") return base && xm != M.zero();
      const bool hom = R.is_homogeneous(x) && M.is_homogeneous(m);
      if (pred == "not_prime_witness") return base && hom;
      return base && hom && xm != M.zero();
    }
    if (pred == "in_gw") return in_gw(relem(a, "x"), set(a, "N").members);
    if (pred == "in_g" || pred == "in_w") {
      const Elem x = relem(a, "x");
      const Subset n = set(a, "N").members;
      const bool graded = pred == "in_g";
      if (graded && !R.is_homogeneous(x)) return false;
      for (Elem m = 0; m < M.order(); ++m) {
        if (graded && !M.is_homogeneous(m)) continue;
        const Elem xm = M.act(x, m);
        if (!n.contains(m) && n.contains(xm) && (graded || xm != M.zero())) return true;
      }
      return false;
    }
    if (pred == "gw_equals" || pred == "gw_union_zero_equals" || pred == "g_equals" ||
        pred == "g_union_zero_equals") {
      const Subset n = set(a, "N").members;
      const Flags f = reference::flags(M, n);
      const bool g = pred == "g_equals" || pred == "g_union_zero_equals";
      Subset want = g ? f.g : f.gw;
      if (pred == "gw_union_zero_equals" || pred == "g_union_zero_equals") want.insert(R.zero());
      return want == set(a, "S").members;
    }
    if (pred == "ngwp_ideal_witness") {
      const Elem x = relem(a, "x"), y = relem(a, "y");
      const Subset p = set(a, "P").members;
      const Elem xy = R.mul(x, y);
      return R.is_homogeneous(x) && R.is_homogeneous(y) && !p.contains(y) && xy != R.zero() && p.contains(xy);
    }
    if (pred == "prime_pair_witness") {
      const Elem x = relem(a, "x"), y = relem(a, "y");
      const Subset p = set(a, "P").members;
      const Elem xy = R.mul(x, y);
      return R.is_homogeneous(x) && R.is_homogeneous(y) && xy != R.zero() && p.contains(xy) && !p.contains(x) &&
             !p.contains(y);
    }
    if (pred == "is_graded_ideal") return reference::is_ideal(R, set(a, "S").members);
    if (pred == "is_graded_submodule") return reference::is_submodule(M, set(a, "S").members);
    if (pred == "weakly_primal" || pred == "primal" || pred == "weakly_prime" || pred == "weakly_primary") {
      const Flags f = reference::flags(M, set(a, "N").members);
      if (pred == "weakly_primal") return f.weakly_primal;
      if (pred == "primal") return f.primal;
      if (pred == "weakly_prime") return f.weakly_prime;
      return f.weakly_primary;
    }
    if (pred == "gw_ideal_equals") return reference::gw_ideal(R, set(a, "P").members) == set(a, "S").members;
    if (pred == "weakly_primal_ideal") {
      Subset g = reference::gw_ideal(R, set(a, "P").members);
      g.insert(R.zero());
      return reference::is_ideal(R, g);
    }
    if (pred == "weakly_prime_ideal") return reference::weakly_prime_ideal(R, set(a, "P").members);
    if (pred == "proper") return set(a, "P").members.size() != R.order();
    if (pred == "colon_equals") {
      const Subset n = set(a, "N").members;
      const Subset l = a.contains("L") ? set(a, "L").members : M.all();
      return reference::colon_ring(M, n, l) == set(a, "S").members;
    }
    if (pred == "ann_equals") {
      return reference::colon_ring(M, Subset(M.order(), {M.zero()}), M.all()) == set(a, "S").members;
    }
    if (pred == "ideal_times_equals") {
      return reference::ideal_times(M, set(a, "I").members, set(a, "N").members) == set(a, "S").members;
    }
    if (pred == "product_nonzero") {
      const Subset i = set(a, "I").members, n = set(a, "N").members;
      for (Elem r : i) {
        for (Elem x : n) {
          if (M.act(r, x) != M.zero()) return true;
        }
      }
      return false;
    }
    if (pred == "subset") return set(a, "A").members.is_subset_of(set(a, "B").members);
    if (pred == "disjoint") return !set(a, "A").members.intersects(set(a, "B").members);
    if (pred == "equal") return set(a, "A").members == set(a, "B").members;
    if (pred == "characterization") return reference::characterization(M, set(a, "N").members, set(a, "P").members);
    if (pred == "cyclic") {
      for (Elem h : M.homogeneous()) {
        if (reference::submodule_closure(M, Subset(M.order(), {h})).size() == M.order()) return true;
      }
      return M.order() == 1;
    }
    if (pred == "multiplication") return reference::is_multiplication(M);
    if (pred == "faithful") {
      return reference::colon_ring(M, Subset(M.order(), {M.zero()}), M.all()).size() == 1;
    }
    if (pred == "quotient_faithful") {
      return reference::colon_ring(M, set(a, "N").members, M.all()).size() == 1;
    }
    if (pred == "wp_ring") {
      const std::size_t len = a.at("max_len").get<std::size_t>();
      for (const Subset& p : reference::ideals(R)) {
        if (!reference::find_ideal_factorization(ring_ptr(), p, len, convention(a))) return false;
      }
      return true;
    }
    if (pred == "ideal_factorizable") {
      return reference::find_ideal_factorization(ring_ptr(), set(a, "P").members, a.at("max_len").get<std::size_t>(),
                                                 convention(a))
          .has_value();
    }
    if (pred == "factorizable") {
      return reference::find_factorization(module_ptr(), set(a, "N").members, a.at("max_len").get<std::size_t>(),
                                           convention(a))
          .has_value();
    }
    return eval_cross(pred, a);
  }

  bool eval_cross(const std::string& pred, const Json& a) {
    if (!local_) throw Malformed("unknown predicate '" + pred + "' or missing localization");
    if (pred == "extend_equals") return local_->extend_module(set(a, "N").members) == set(a, "S").members;
    if (pred == "extend_ideal_equals") return local_->extend_ring(set(a, "P").members) == set(a, "S").members;
    if (pred == "contract_equals") return local_->contract_module(set(a, "N").members) == set(a, "S").members;
    if (pred == "contract_ideal_equals") return local_->contract_ring(set(a, "P").members) == set(a, "S").members;
    if (pred == "class_in" || pred == "class_nonzero") {
      const Elem m = a.at("m").get<Elem>(), s = a.at("s").get<Elem>();
      if (m >= inst_.module->order() || s >= local_->den_index.size() ||
          local_->den_index[s] == static_cast<std::size_t>(-1)) {
        throw Malformed("pair outside the localization");
      }
      const Elem c = local_->module_class_of(m, s);
      if (pred == "class_nonzero") return c != local_->module->zero();
      return set(a, "N").members.contains(c);
    }
    if (pred == "equivalence") return local_->equivalence_ok;
    if (pred == "phi_homomorphism") return local_->phi_ok;
    throw Malformed("unknown predicate '" + pred + "'");
  }

  bool eval_integer(const std::string& pred, const Json& a) const {
    if (!integer_) throw Malformed("integer fact on a table instance");
    const IntegerOracle& z = *integer_;
    const long m = z.modulus();
    if (pred == "int_ngwp_witness") {
      const long x = a.at("x").get<long>(), y = a.at("y").get<long>();
      return y % m != 0 && x * y != 0 && (x * y) % m == 0;
    }
    if (pred == "int_in_gw") return z.in_gw(a.at("x").get<long>());
    if (pred == "int_in_g") return z.in_g(a.at("x").get<long>());
    if (pred == "int_in_w") return z.in_w(a.at("x").get<long>());
    if (pred == "int_colon_member") return a.at("x").get<long>() % m == 0;
    if (pred == "int_weakly_primal") return z.weakly_primal();
    if (pred == "int_primal") return z.primal();
    if (pred == "int_weakly_prime") return z.weakly_prime();
    if (pred == "int_weakly_primary") return z.weakly_primary();
    throw Malformed("unknown integer predicate '" + pred + "'");
  }

  const Json& cert_;
  Instance inst_;
  std::shared_ptr<const LocalView> local_;
  std::shared_ptr<const IntegerOracle> integer_;
  std::string context_ = "base";
};

}  // namespace

VerifyResult verify_certificate(const Json& certificate) {
  if (!certificate.is_object() || !certificate.contains("instance") || !certificate.contains("facts")) {
    throw StaleDescriptor("certificate lacks an instance or facts");
  }
  Verifier v(certificate);
  return v.run();
}

}  // namespace graded_lab::harness
