#pragma once

#include <string>

#include "graded_lab/harness/runner.hpp"

namespace graded_lab::harness {

inline constexpr const char* kVersion = "0.1.0";

/// {meta, claims, discrepancies, factorizations}; key order and content depend only on the run.
Json report_json(const RunResult& run);
std::string report_text(const RunResult& run);

/// Side-by-side table of example statements.
std::string examples_text(const RunResult& run);

}  // namespace graded_lab::harness
