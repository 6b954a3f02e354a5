#pragma once

#include <optional>
#include <string>
#include <variant>

#include "graded_lab/primality.hpp"
#include "graded_lab/submodule.hpp"

namespace graded_lab {

/// The Z-module Z with submodule mZ (trivial grading).
struct ZMultiples {
  long m = 1;
};

/// The Z-module Z_n with submodule dZ_n, d | n (trivial grading).
struct ZnQuotient {
  long n = 1;
  long d = 1;
};

using ZInstance = std::variant<ZMultiples, ZnQuotient>;

/// Throws std::invalid_argument unless m >= 1, or n >= 1 with d | n.
void check_zinstance(const ZInstance& z);
std::string zinstance_name(const ZInstance& z);

struct TableModel {
  RingPtr ring;
  ModulePtr module;
  GradedSubmodule submodule;
  std::string surrogate_note;
};

/// Exact table model of (Z_n, dZ_n) over the base ring Z_n. An integer x acts as x mod n, so
/// every primality status of x depends only on x mod n.
TableModel zinstance_to_table(const ZnQuotient& z);

/// The Z-module Z_n with submodule dZ_n over the base ring Z, decided on the table model.
///
/// An integer acts through its residue, so membership in GW(N), G(N), W(N) and (N :_Z M) is read
/// off the residue. Ideal-ness is decided in Z: a nonzero multiple of n acts as zero, so it lies in
/// G(N) when N != M but never in GW(N). GW(N) + {0} is therefore an ideal of Z only when GW(N) is
/// empty, while the table model over Z_n can still call N weakly primal.
class QuotientModel {
 public:
  explicit QuotientModel(ZnQuotient z);
  const TableModel& table() const { return table_; }
  const PrimalityVerdict& residue_verdict() const { return verdict_; }
  long residue(long x) const { return ((x % z_.n) + z_.n) % z_.n; }
  bool in_gw(long x) const { return verdict_.gw.contains(static_cast<Elem>(residue(x))); }
  bool in_g(long x) const { return verdict_.g.contains(static_cast<Elem>(residue(x))); }
  bool in_w(long x) const { return verdict_.w.contains(static_cast<Elem>(residue(x))); }
  bool in_colon(long x) const { return colon_.contains(static_cast<Elem>(residue(x))); }
  bool is_weakly_primal() const { return weakly_primal_; }
  bool is_primal() const { return primal_; }
  bool is_weakly_prime() const { return verdict_.is_weakly_prime; }
  bool is_weakly_primary() const { return verdict_.is_weakly_primary; }

 private:
  ZnQuotient z_;
  TableModel table_;
  PrimalityVerdict verdict_;
  Subset colon_;
  bool weakly_primal_ = false;
  bool primal_ = false;
};

/// Residue reduction of (Z, mZ).
///
/// For nonzero x, y the product xy is nonzero in Z, so x is not weakly prime to mZ exactly when
/// its residue is annihilated by some nonzero residue mod m. All sets are reported as residue
/// classes mod m; the integer 0 is treated separately (it is always weakly prime to mZ).
class IntegerModel {
 public:
  explicit IntegerModel(long m);

  long modulus() const { return m_; }
  /// Z_m over itself with submodule {0}: the finite surrogate the residue sets live in.
  const TableModel& surrogate() const { return surrogate_; }

  long residue(long x) const { return ((x % m_) + m_) % m_; }

  /// Witness y in [1, m-1] with 0 != xy in mZ and y not in mZ, when x is not weakly prime to mZ.
  std::optional<long> ngwp_witness(long x) const;
  bool in_gw(long x) const { return ngwp_witness(x).has_value(); }
  /// Some y outside mZ with xy in mZ (no nonzero escape).
  bool in_g(long x) const;
  /// The grading is trivial, so W(mZ) = GW(mZ).
  bool in_w(long x) const { return in_gw(x); }
  bool in_colon(long x) const { return residue(x) == 0; }

  /// Residue classes of GW(mZ) (as a set, GW(mZ) is their preimage minus {0}).
  const Subset& gw_residues() const { return zero_divisor_residues_; }
  /// Residue classes of G(mZ).
  const Subset& g_residues() const { return zero_divisor_residues_; }

  /// Ideal-ness of GW(mZ) + {0} and G(mZ) + {0}, decided on the residue-class set in Z_m.
  bool is_weakly_primal() const { return residue_set_is_ideal_; }
  bool is_primal() const { return residue_set_is_ideal_; }
  /// Requires mZ != Z.
  bool is_weakly_prime() const;
  bool is_weakly_primary() const;

 private:
  long m_;
  TableModel surrogate_;
  Subset zero_divisor_residues_;
  bool residue_set_is_ideal_ = true;
};

}  // namespace graded_lab
