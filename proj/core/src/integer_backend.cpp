#include "graded_lab/integer_backend.hpp"

#include <stdexcept>

namespace graded_lab {

void check_zinstance(const ZInstance& z) {
  if (const auto* zm = std::get_if<ZMultiples>(&z)) {
    if (zm->m < 1) throw std::invalid_argument("ZInstance: m must be >= 1");
    return;
  }
  const auto& zn = std::get<ZnQuotient>(z);
  if (zn.n < 1) throw std::invalid_argument("ZInstance: n must be >= 1");
  if (zn.d < 1 || zn.n % zn.d != 0) throw std::invalid_argument("ZInstance: d must divide n");
}

std::string zinstance_name(const ZInstance& z) {
  if (const auto* zm = std::get_if<ZMultiples>(&z)) return "(Z, " + std::to_string(zm->m) + "Z)";
  const auto& zn = std::get<ZnQuotient>(z);
  return "(Z_" + std::to_string(zn.n) + ", " + std::to_string(zn.d) + "Z_" + std::to_string(zn.n) + ")";
}

TableModel zinstance_to_table(const ZnQuotient& z) {
  check_zinstance(z);
  RingPtr ring = make_Zn(static_cast<std::size_t>(z.n));
  ModulePtr module = self_module(ring);
  auto n = submodule_generated_by(module, std::vector<Elem>{static_cast<Elem>(z.d % z.n)});
  return {ring, module, n,
          "Z-module Z_" + std::to_string(z.n) + " modelled over the base ring Z_" + std::to_string(z.n) +
              " (integers act through their residues; ideal-ness of GW(N) and G(N) is decided in Z_" +
              std::to_string(z.n) + ")"};
}

namespace {

// Whether the preimage in Z of a residue set, together with the integer 0, is an ideal of Z.
bool preimage_with_zero_is_ideal(const GradedRing& zn, const Subset& residues) {
  if (residues.empty()) return true;
  // x in the set forces nx, a nonzero integer with residue 0, into the ideal.
  if (!residues.contains(zn.zero())) return false;
  return static_cast<bool>(is_graded_ideal(zn, residues));
}

}  // namespace

QuotientModel::QuotientModel(ZnQuotient z) : z_(z), table_(zinstance_to_table(z)), verdict_(classify(table_.submodule)) {
  colon_ = colon_into_ring(table_.submodule).members();
  weakly_primal_ = preimage_with_zero_is_ideal(*table_.ring, verdict_.gw.members);
  primal_ = preimage_with_zero_is_ideal(*table_.ring, verdict_.g.members);
}

namespace {

TableModel surrogate_for(long m) {
  RingPtr ring = make_Zn(static_cast<std::size_t>(m));
  ModulePtr module = self_module(ring);
  return {ring, module, GradedSubmodule::zero(module),
          "(Z, " + std::to_string(m) + "Z) reduced to residues: Z_" + std::to_string(m) + " over itself, N = {0}"};
}

}  // namespace

IntegerModel::IntegerModel(long m) : m_(m), surrogate_(surrogate_for(m)) {
  check_zinstance(ZMultiples{m});
  const auto& module = surrogate_.module;
  zero_divisor_residues_ = Subset(static_cast<std::size_t>(m));
  for (Elem x = 0; x < static_cast<Elem>(m); ++x) {
    // Some nonzero residue y with xy = 0.
    if (ann_in_module(x, module).size() > 1) zero_divisor_residues_.insert(x);
  }
  Subset with_zero = zero_divisor_residues_;
  with_zero.insert(0);
  residue_set_is_ideal_ = static_cast<bool>(is_graded_ideal(*surrogate_.ring, with_zero));
}

std::optional<long> IntegerModel::ngwp_witness(long x) const {
  if (x == 0) return std::nullopt;
  const long r = residue(x);
  for (long y = 1; y < m_; ++y) {
    if ((r * y) % m_ == 0) return y;
  }
  return std::nullopt;
}

bool IntegerModel::in_g(long x) const {
  if (x == 0) return m_ > 1;
  return zero_divisor_residues_.contains(static_cast<Elem>(residue(x)));
}

bool IntegerModel::is_weakly_prime() const {
  if (m_ == 1) return false;
  // Nonzero residues x, y with xy = 0 lift to nonzero integers with 0 != xy in mZ.
  for (Elem x = 1; x < static_cast<Elem>(m_); ++x) {
    if (zero_divisor_residues_.contains(x)) return false;
  }
  return true;
}

bool IntegerModel::is_weakly_primary() const {
  const auto& R = *surrogate_.ring;
  for (Elem x = 1; x < static_cast<Elem>(m_); ++x) {
    if (!zero_divisor_residues_.contains(x)) continue;
    bool nilpotent = false;
    Elem p = x;
    for (long k = 1; k <= m_ && !nilpotent; ++k) {
      nilpotent = p == 0;
      p = R.mul(p, x);
    }
    if (!nilpotent) return false;
  }
  return true;
}

}  // namespace graded_lab
