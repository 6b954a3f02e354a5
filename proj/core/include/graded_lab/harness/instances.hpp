#pragma once

#include <vector>

#include "graded_lab/harness/budget.hpp"

namespace graded_lab::harness {

/// The instance stream for a budget, as structure documents, in a fixed order: Z_n over itself,
/// quadratic rings, products / free modules / quotients, (Z, mZ), then (Z_n, dZ_n).
std::vector<Json> enumerate_instances(const Budget& budget);

}  // namespace graded_lab::harness
