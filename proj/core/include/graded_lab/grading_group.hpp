#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace graded_lab {

/// Degree in a grading group, as a mixed-radix index into the group's elements.
using Degree = std::size_t;

/// Finite abelian group Z_{k1} x ... x Z_{kr}; the empty product is the trivial group.
class GradingGroup {
 public:
  GradingGroup() = default;
  explicit GradingGroup(std::vector<int> cyclic_orders);

  static GradingGroup trivial() { return GradingGroup{}; }
  static GradingGroup cyclic(int n) { return GradingGroup({n}); }

  const std::vector<int>& cyclic_orders() const { return orders_; }
  std::size_t size() const { return size_; }
  Degree identity() const { return 0; }

  Degree add(Degree a, Degree b) const;
  Degree negate(Degree a) const;
  Degree subtract(Degree a, Degree b) const { return add(a, negate(b)); }

  std::vector<int> to_tuple(Degree a) const;
  Degree from_tuple(const std::vector<int>& t) const;
  std::string label(Degree a) const;

  bool operator==(const GradingGroup& o) const { return orders_ == o.orders_; }

 private:
  std::vector<int> orders_;
  std::size_t size_ = 1;
};

}  // namespace graded_lab
