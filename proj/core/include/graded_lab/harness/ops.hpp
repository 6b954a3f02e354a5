#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "graded_lab/factorization.hpp"
#include "graded_lab/integer_backend.hpp"
#include "graded_lab/localization.hpp"

namespace graded_lab::harness {

/// Primality data of one submodule.
struct Flags {
  Subset gw, g, w;
  std::vector<std::optional<Elem>> gw_witness;
  bool weakly_primal = false;
  bool primal = false;
  bool weakly_prime = false;
  bool weakly_primary = false;

  /// GW(N) + {0}.
  Subset adjoint(Elem zero) const {
    Subset a = gw;
    a.insert(zero);
    return a;
  }
};

/// M_S and R_S with the class maps, however they were computed.
struct LocalView {
  RingPtr base_ring;
  ModulePtr base_module;
  RingPtr ring;
  ModulePtr module;
  std::vector<Elem> denominators;
  std::vector<std::size_t> den_index;
  std::vector<Elem> ring_class, module_class;  // numerator * |S| + den position -> class
  std::vector<FractionPair> ring_rep, module_rep;
  bool equivalence_ok = true;
  std::string equivalence_detail;
  bool phi_ok = true;
  std::string phi_detail;

  Elem ring_class_of(Elem r, Elem s) const { return ring_class[r * denominators.size() + den_index[s]]; }
  Elem module_class_of(Elem m, Elem s) const { return module_class[m * denominators.size() + den_index[s]]; }
  Elem phi_ring(Elem r) const { return ring_class_of(r, base_ring->one()); }
  Elem phi_module(Elem m) const { return module_class_of(m, base_ring->one()); }
  /// N -> N_S, P -> P_S, and preimages under phi.
  Subset extend_module(const Subset& n) const;
  Subset extend_ring(const Subset& p) const;
  Subset contract_module(const Subset& n) const;
  Subset contract_ring(const Subset& p) const;
};

/// Predicates on (Z, mZ).
class IntegerOracle {
 public:
  virtual ~IntegerOracle() = default;
  virtual long modulus() const = 0;
  virtual bool in_gw(long x) const = 0;
  virtual bool in_g(long x) const = 0;
  virtual bool in_w(long x) const = 0;
  /// A y outside mZ with 0 != xy in mZ.
  virtual std::optional<long> ngwp_witness(long x) const = 0;
  virtual bool weakly_primal() const = 0;
  virtual bool primal() const = 0;
  virtual bool weakly_prime() const = 0;
  virtual bool weakly_primary() const = 0;
};

/// The primitive computations claims are phrased in. Two implementations exist: the library
/// and a naive reference built from table lookups and double loops.
class AlgebraOps {
 public:
  virtual ~AlgebraOps() = default;
  virtual std::string_view name() const = 0;

  virtual std::vector<Subset> submodules(const ModulePtr& m) const = 0;
  virtual std::vector<Subset> ideals(const RingPtr& r) const = 0;
  virtual std::vector<Subset> multiplicative_sets(const RingPtr& r) const = 0;

  virtual bool is_ideal(const RingPtr& r, const Subset& s) const = 0;
  virtual Flags flags(const ModulePtr& m, const Subset& n) const = 0;
  virtual Subset gw_ideal(const RingPtr& r, const Subset& p) const = 0;
  /// 0 != xy in P with x, y homogeneous forces x or y into P (properness not checked).
  virtual bool weakly_prime_ideal(const RingPtr& r, const Subset& p) const = 0;
  virtual bool characterization(const ModulePtr& m, const Subset& n, const Subset& p) const = 0;

  /// (N :_R L).
  virtual Subset colon_ring(const ModulePtr& m, const Subset& n, const Subset& l) const = 0;
  virtual Subset ann_module(const ModulePtr& m) const = 0;
  /// I N.
  virtual Subset ideal_times(const ModulePtr& m, const Subset& ideal, const Subset& n) const = 0;
  virtual bool is_cyclic(const ModulePtr& m) const = 0;
  virtual bool is_multiplication(const ModulePtr& m) const = 0;
  /// M/N is faithful.
  virtual bool quotient_faithful(const ModulePtr& m, const Subset& n) const = 0;

  virtual std::shared_ptr<const LocalView> localize(const ModulePtr& m, const Subset& s) const = 0;

  virtual WpReport wp_ring(const RingPtr& r, std::size_t max_len, FactorConvention c) const = 0;
  virtual WpReport wp_module(const ModulePtr& m, std::size_t max_len, FactorConvention c) const = 0;

  virtual std::shared_ptr<const IntegerOracle> integer(long m) const = 0;
};

const AlgebraOps& library_ops();
const AlgebraOps& reference_ops();

namespace reference {

/// Windowed brute force over (Z, mZ): witnesses y range over [-4m, 4m].
std::shared_ptr<const IntegerOracle> integer_oracle(long m);
/// Windowed brute force over the Z-module (Z_n, dZ_n): scalars x in [-4n, 4n].
struct ZnOracle {
  long n, d;
  bool in_n(long m) const;
  bool in_gw(long x) const;
  bool in_g(long x) const;
  bool in_w(long x) const;
  bool in_colon(long x) const;
  bool weakly_primal() const;
  bool primal() const;
  bool weakly_prime() const;
  bool weakly_primary() const;
};

/// Localization from the definition: (a, s) ~ (b, t) iff u(at - bs) = 0 for some u in S.
std::shared_ptr<const LocalView> localize(const ModulePtr& m, const Subset& s);

/// Naive closure of the submodule generated by a set.
Subset submodule_closure(const GradedModule& m, const Subset& gens);
Subset ideal_closure(const GradedRing& r, const Subset& gens);
bool is_ideal(const GradedRing& r, const Subset& s);
bool is_submodule(const GradedModule& m, const Subset& s);
Flags flags(const GradedModule& m, const Subset& n);
Subset gw_ideal(const GradedRing& r, const Subset& p);
bool weakly_prime_ideal(const GradedRing& r, const Subset& p);
bool characterization(const GradedModule& m, const Subset& n, const Subset& p);
Subset colon_ring(const GradedModule& m, const Subset& n, const Subset& l);
Subset ideal_times(const GradedModule& m, const Subset& ideal, const Subset& n);
Subset ideal_product(const GradedRing& r, const Subset& a, const Subset& b);
std::vector<Subset> submodules(const GradedModule& m);
std::vector<Subset> ideals(const GradedRing& r);
bool is_multiplication(const GradedModule& m);
/// First factorization of `target` (ring ideal when tail is false) by naive tuple search.
std::optional<Factorization> find_factorization(const ModulePtr& m, const Subset& target, std::size_t max_len,
                                                FactorConvention c);
std::optional<Factorization> find_ideal_factorization(const RingPtr& r, const Subset& target, std::size_t max_len,
                                                      FactorConvention c);

}  // namespace reference

}  // namespace graded_lab::harness
