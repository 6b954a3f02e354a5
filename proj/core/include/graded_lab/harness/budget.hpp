#pragma once

#include <optional>
#include <string>

#include "graded_lab/harness/descriptor.hpp"

namespace graded_lab::harness {

/// Limits on the instance stream. Zero disables a family.
struct Budget {
  std::size_t max_zn = 24;           // Z_n over itself, n = 2..max_zn
  std::size_t max_quadratic_n = 5;   // quadratic(n, a) for n in {2, 3, 5} up to this
  bool include_products = true;      // products, free modules and quotients
  std::size_t max_order = 64;        // carriers above this are skipped
  long max_z_multiple = 16;          // (Z, mZ) for m = 2..max_z_multiple
  long max_zn_instance = 32;         // (Z_n, dZ_n) for n = 2..max_zn_instance
  std::size_t max_factor_len = 4;

  bool operator==(const Budget&) const = default;
};

Budget default_budget();
Json to_json(const Budget& b);
/// Missing keys keep their defaults; unknown keys are an InputError.
Budget budget_from_json(const Json& j);
/// Reads `path`, else the file named by GRADED_LAB_BUDGET, else the default budget.
Budget load_budget(const std::optional<std::string>& path);

inline constexpr const char* kBudgetEnvVar = "GRADED_LAB_BUDGET";

}  // namespace graded_lab::harness
