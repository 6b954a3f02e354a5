#pragma once

#include <initializer_list>
#include <vector>

#include "graded_lab/errors.hpp"
#include "graded_lab/subset.hpp"

namespace testing_support {

inline std::vector<long> longs(const graded_lab::Subset& s) {
  std::vector<long> out;
  for (graded_lab::Elem e : s) out.push_back(static_cast<long>(e));
  return out;
}

inline graded_lab::Subset set_of(std::size_t universe, const std::vector<long>& members) {
  graded_lab::Subset s(universe);
  for (long m : members) s.insert(static_cast<graded_lab::Elem>(m));
  return s;
}

inline graded_lab::Subset set_of(std::size_t universe, std::initializer_list<long> members) {
  return set_of(universe, std::vector<long>(members));
}

inline bool has_axiom(const std::vector<graded_lab::Violation>& v, const char* axiom) {
  for (const auto& x : v)
    if (x.axiom == axiom) return true;
  return false;
}

}  // namespace testing_support
