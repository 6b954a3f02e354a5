#pragma once

#include <vector>

#include "graded_lab/subset.hpp"

namespace graded_lab::detail {

/// Least subset containing zero and `seeds` that is closed under addition, under the
/// scalar action, and under taking homogeneous parts.
template <typename Add, typename Act, typename Part>
Subset close_graded(std::size_t n, std::size_t scalars, std::size_t degrees, Elem zero, const Subset& seeds,
                    Add add, Act act, Part part) {
  Subset members(n);
  std::vector<Elem> order;
  order.reserve(n);
  auto push = [&](Elem x) {
    if (!members.contains(x)) {
      members.insert(x);
      order.push_back(x);
    }
  };
  push(zero);
  for (Elem s : seeds) push(s);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Elem x = order[i];
    for (std::size_t g = 0; g < degrees; ++g) push(part(x, g));
    for (std::size_t r = 0; r < scalars; ++r) push(act(static_cast<Elem>(r), x));
    const std::size_t known = order.size();
    for (std::size_t j = 0; j < known; ++j) push(add(x, order[j]));
  }
  return members;
}

/// {a + b : a in A, b in B}.
template <typename Add>
Subset sumset(std::size_t n, const Subset& a, const Subset& b, Add add) {
  Subset out(n);
  for (Elem x : a) {
    for (Elem y : b) out.insert(add(x, y));
  }
  return out;
}

}  // namespace graded_lab::detail
