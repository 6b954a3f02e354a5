#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "graded_lab/claim_status.hpp"
#include "graded_lab/harness/budget.hpp"
#include "graded_lab/harness/certificate.hpp"
#include "graded_lab/harness/ops.hpp"

namespace graded_lab::harness {

/// What a claim quantifies over on one instance.
enum class ClaimScope {
  Submodule,  // every selected graded submodule (and derived data: ideals, S, L)
  Instance,   // the instance as a whole (or its ideals)
  Example,    // one fixed instance of its own
};

struct ClaimSpec {
  std::string id;
  /// The statement in plain words, as it is checked.
  std::string statement;
  ClaimScope scope = ClaimScope::Submodule;
  /// Also evaluated on (Z, mZ).
  bool integer_applicable = false;
  /// How an ambiguous statement was read; empty when there was nothing to decide.
  std::string interpretation;
  /// Fixed instance of an example claim.
  std::optional<Json> instance;
};

/// Every claim, in the order of the statements they encode.
const std::vector<ClaimSpec>& registry();
const ClaimSpec* find_claim(std::string_view id);

/// One statement of an example, as asserted and as computed.
struct ExamplePart {
  std::string statement;
  bool asserted = true;
  bool computed = false;
  bool agrees() const { return asserted == computed; }
};

struct ClaimResult {
  std::string claim;
  Json instance;
  std::string instance_name;
  ClaimStatus status = ClaimStatus::HypothesisUnmet;
  /// Cases examined, and among them those meeting the hypothesis.
  std::size_t cases = 0;
  std::size_t cases_met = 0;
  std::size_t cases_refuted = 0;
  std::string detail;
  std::optional<Json> certificate;
  /// Set once the certificate has been re-checked.
  std::optional<bool> certificate_verified;
  std::vector<ExamplePart> parts;
};

struct EmittedFactorization {
  std::string instance_name;
  Json instance;
  bool module = false;
  FactorConvention convention = FactorConvention::AnyIdeal;
  Factorization factorization;
};

/// Per-instance caches shared by all claims evaluated on it.
class ClaimContext {
 public:
  ClaimContext(Instance instance, const AlgebraOps& ops, const Budget& budget);

  const Instance& instance() const { return inst_; }
  const AlgebraOps& ops() const { return ops_; }
  const Budget& budget() const { return budget_; }
  const RingPtr& ring() const { return inst_.ring; }
  const ModulePtr& module() const { return inst_.module; }

  /// Submodules claims quantify over: the designated one, the listed ones, or all.
  const std::vector<Subset>& submodules();
  const std::vector<Subset>& all_submodules();
  const std::vector<Subset>& ideals();
  const std::vector<Subset>& s_sets();
  const Flags& flags(const Subset& n);
  const Subset& colon(const Subset& n);
  std::shared_ptr<const LocalView> local(const Subset& s);
  const Flags& local_flags(const Subset& s, const Subset& n);
  const std::vector<Subset>& local_submodules(const Subset& s);
  bool cyclic();
  bool multiplication();
  const Subset& annihilator();
  bool faithful() { return annihilator().size() == 1; }

  std::vector<EmittedFactorization>& factorizations() { return factorizations_; }

 private:
  Instance inst_;
  const AlgebraOps& ops_;
  Budget budget_;
  std::optional<std::vector<Subset>> submodules_, all_submodules_, ideals_, s_sets_;
  std::unordered_map<Subset, Flags, SubsetHash> flags_;
  std::unordered_map<Subset, Subset, SubsetHash> colon_;
  std::unordered_map<Subset, std::shared_ptr<const LocalView>, SubsetHash> local_;
  std::unordered_map<Subset, std::unordered_map<Subset, Flags, SubsetHash>, SubsetHash> local_flags_;
  std::unordered_map<Subset, std::vector<Subset>, SubsetHash> local_submodules_;
  std::vector<EmittedFactorization> factorizations_;
  std::optional<bool> cyclic_, multiplication_;
  std::optional<Subset> ann_;
};

/// Whether the claim is evaluated on this instance at all.
bool applies(const ClaimSpec& spec, const Instance& instance);

/// Evaluates every case of the claim on the context's instance. Example claims ignore the
/// context and use their own instance (see `evaluate_example`).
ClaimResult evaluate_claim(const ClaimSpec& spec, ClaimContext& context);
ClaimResult evaluate_example(const ClaimSpec& spec, const AlgebraOps& ops, const Budget& budget);

}  // namespace graded_lab::harness
