#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graded_lab/harness/claims.hpp"

namespace graded_lab::harness {

struct RunOptions {
  Budget budget = default_budget();
  /// Claim ids to run; empty runs all.
  std::vector<std::string> claims;
  /// Instance documents; unset uses enumerate_instances(budget).
  std::optional<std::vector<Json>> instances;
  std::size_t jobs = 1;
  const AlgebraOps* ops = nullptr;  // library_ops() when null
  bool verify = true;
};

struct FactorizationRecord {
  EmittedFactorization emitted;
  bool valid = false;
  std::string failure;
};

struct RunResult {
  Budget budget;
  std::vector<std::string> instance_names;
  /// Registry order, then instance order.
  std::vector<ClaimResult> results;
  std::size_t certificates = 0;
  std::size_t certificates_verified = 0;
  std::vector<FactorizationRecord> factorizations;
  std::size_t factorizations_valid = 0;
  /// Instances that failed to build or broke an internal invariant.
  std::vector<std::string> errors;
};

/// Throws InputError on an unknown claim id.
RunResult run_claims(const RunOptions& options);

/// Checks a factorization with naive products and naive primality on a fresh rebuild.
FactorizationRecord revalidate_independently(const EmittedFactorization& f);

}  // namespace graded_lab::harness
