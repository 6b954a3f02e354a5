#include "graded_lab/grading_group.hpp"

#include <stdexcept>

namespace graded_lab {

GradingGroup::GradingGroup(std::vector<int> cyclic_orders) : orders_(std::move(cyclic_orders)) {
  size_ = 1;
  for (int k : orders_) {
    if (k < 1) throw std::invalid_argument("cyclic factor order must be positive");
    size_ *= static_cast<std::size_t>(k);
  }
}

std::vector<int> GradingGroup::to_tuple(Degree a) const {
  std::vector<int> t(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    t[i] = static_cast<int>(a % static_cast<std::size_t>(orders_[i]));
    a /= static_cast<std::size_t>(orders_[i]);
  }
  return t;
}

Degree GradingGroup::from_tuple(const std::vector<int>& t) const {
  if (t.size() != orders_.size()) throw std::invalid_argument("degree tuple has wrong length");
  Degree a = 0;
  for (std::size_t i = orders_.size(); i-- > 0;) {
    int k = orders_[i];
    int r = ((t[i] % k) + k) % k;
    a = a * static_cast<std::size_t>(k) + static_cast<std::size_t>(r);
  }
  return a;
}

Degree GradingGroup::add(Degree a, Degree b) const {
  auto ta = to_tuple(a);
  auto tb = to_tuple(b);
  for (std::size_t i = 0; i < ta.size(); ++i) ta[i] = (ta[i] + tb[i]) % orders_[i];
  return from_tuple(ta);
}

Degree GradingGroup::negate(Degree a) const {
  auto t = to_tuple(a);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = (orders_[i] - t[i]) % orders_[i];
  return from_tuple(t);
}

std::string GradingGroup::label(Degree a) const {
  if (orders_.empty()) return "e";
  auto t = to_tuple(a);
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + ")";
}

}  // namespace graded_lab
