#pragma once

#include <string>
#include <vector>

#include "graded_lab/harness/descriptor.hpp"
#include "graded_lab/harness/ops.hpp"

namespace graded_lab::harness {

/// Collects the named sets and the facts that make a verdict re-checkable.
///
/// Sets live in the base structure or, after `localize`, in R_S / M_S (stored there as
/// canonical fraction pairs). A fact is a predicate name, arguments (elements or set names)
/// and the value it is expected to take.
class CertificateBuilder {
 public:
  CertificateBuilder(std::string claim, Json instance);

  /// Names a set of ring elements ("ring") or module elements ("module").
  std::string ring_set(const std::string& name, const Subset& s);
  std::string module_set(const std::string& name, const Subset& s);
  /// Switches on the local context for S; the set is recorded as "S".
  void localize(const Subset& s, const LocalView& view);
  std::string local_ring_set(const std::string& name, const Subset& s);
  std::string local_module_set(const std::string& name, const Subset& s);
  Json local_ring_elem(Elem cls) const;
  Json local_module_elem(Elem cls) const;

  void fact(const std::string& pred, Json args, bool expect, const std::string& context = "base");
  Json build() const { return doc_; }

 private:
  std::string add_set(const std::string& name, const std::string& kind, const std::string& context, Json members);
  Json doc_;
  const LocalView* view_ = nullptr;
};

struct VerifyResult {
  bool ok = true;
  std::size_t facts = 0;
  std::vector<std::string> failures;
};

/// Rebuilds the instance and re-evaluates every fact with table lookups and naive loops.
/// Throws StaleDescriptor when the instance (or its localization) no longer rebuilds.
VerifyResult verify_certificate(const Json& certificate);

}  // namespace graded_lab::harness
