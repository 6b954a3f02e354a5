#pragma once

// Axiom checks shared by ring and module validation.

#include <optional>
#include <string>
#include <vector>

#include "graded_lab/errors.hpp"
#include "graded_lab/grading_group.hpp"
#include "graded_lab/subset.hpp"

namespace graded_lab::detail {

inline Elem at(const std::vector<Elem>& t, std::size_t n, Elem a, Elem b) { return t[a * n + b]; }

/// Table has n*n entries, all < n.
bool check_square_table(const std::vector<Elem>& table, std::size_t n, const std::string& name,
                        std::vector<Violation>& out);

/// Locates the neutral element of a binary table, if any.
std::optional<Elem> find_neutral(const std::vector<Elem>& table, std::size_t n);

/// Abelian group axioms of an addition table with the given zero; returns the negation table
/// when every element has an inverse.
std::optional<std::vector<Elem>> check_abelian_group(const std::vector<Elem>& add, std::size_t n, Elem zero,
                                                     const std::string& what, std::vector<Violation>& out);

struct GradingData {
  std::vector<Subset> components;
  std::vector<Elem> decomp;  // n x |G|
  std::vector<std::optional<Degree>> degree;
  Subset homogeneous;
};

/// Component subgroups + internal direct sum. Component lists shorter than |G| are padded with {0}.
std::optional<GradingData> check_grading(const std::vector<Elem>& add, std::size_t n, Elem zero,
                                         const GradingGroup& group,
                                         const std::vector<std::vector<Elem>>& components,
                                         const std::string& what, std::vector<Violation>& out);

}  // namespace graded_lab::detail
