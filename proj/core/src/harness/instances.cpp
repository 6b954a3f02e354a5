#include "graded_lab/harness/instances.hpp"

#include <set>
#include <string>

namespace graded_lab::harness {

namespace {

Json zn(std::size_t n) { return {{"kind", "Zn"}, {"n", n}}; }
Json quad(std::size_t n, std::size_t a) { return {{"kind", "quadratic"}, {"n", n}, {"a", a}}; }
Json product(Json a, Json b) { return {{"kind", "product"}, {"factors", Json::array({std::move(a), std::move(b)})}}; }
Json self() { return {{"kind", "self"}}; }
Json free(std::size_t rank) { return {{"kind", "free"}, {"rank", rank}}; }
Json quotient(std::vector<Elem> gen) { return {{"kind", "quotient"}, {"by", {{"gen", gen}}}}; }

Json doc(std::string name, Json ring, Json module) {
  return {{"name", std::move(name)}, {"ring", std::move(ring)}, {"module", std::move(module)}};
}

bool fits(const Json& d, std::size_t max_order) {
  if (d.contains("zinstance")) return true;
  const Instance inst = build_instance(d);
  return inst.ring->order() <= max_order && inst.module->order() <= max_order;
}

}  // namespace

std::vector<Json> enumerate_instances(const Budget& b) {
  std::vector<Json> out;
  auto push = [&](Json d) {
    if (fits(d, b.max_order)) out.push_back(std::move(d));
  };
  for (std::size_t n = 2; n <= b.max_zn; ++n) push(doc("Z_" + std::to_string(n), zn(n), self()));
  for (std::size_t n : {2, 3, 5}) {
    if (n > b.max_quadratic_n) continue;
    std::set<std::size_t> as{0, 1, n - 1};
    for (std::size_t a : as) {
      push(doc("Q(" + std::to_string(n) + "," + std::to_string(a) + ")", quad(n, a), self()));
    }
  }
  if (b.include_products) {
    push(doc("Z_2^2", zn(2), free(2)));
    push(doc("Z_4^2", zn(4), free(2)));
    push(doc("Q(2,0)^2", quad(2, 0), free(2)));
    push(doc("Q(2,1)^2", quad(2, 1), free(2)));
    push(doc("Z_2xZ_2", product(zn(2), zn(2)), self()));
    push(doc("Z_2xZ_3", product(zn(2), zn(3)), self()));
    push(doc("Z_2xZ_4", product(zn(2), zn(4)), self()));
    push(doc("Z_3xZ_3", product(zn(3), zn(3)), self()));
    push(doc("Z_24/(12)", zn(24), quotient({12})));
    push(doc("Z_12/(6)", zn(12), quotient({6})));
    push(doc("Z_8/(4)", zn(8), quotient({4})));
  }
  for (long m = 2; m <= b.max_z_multiple; ++m) push(Json{{"zinstance", {{"m", m}}}});
  for (long n = 2; n <= b.max_zn_instance; ++n) {
    if (static_cast<std::size_t>(n) > b.max_order) continue;
    for (long d = 1; d <= n; ++d) {
      if (n % d == 0) push(Json{{"zinstance", {{"n", n}, {"d", d}}}});
    }
  }
  return out;
}

}  // namespace graded_lab::harness
