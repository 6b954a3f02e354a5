#pragma once

#include <string_view>

namespace graded_lab {

enum class ClaimStatus { Confirmed, Refuted, HypothesisUnmet, BudgetExceeded };

constexpr std::string_view to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Confirmed: return "Confirmed";
    case ClaimStatus::Refuted: return "Refuted";
    case ClaimStatus::HypothesisUnmet: return "HypothesisUnmet";
    case ClaimStatus::BudgetExceeded: return "BudgetExceeded";
  }
  return "?";
}

}  // namespace graded_lab
