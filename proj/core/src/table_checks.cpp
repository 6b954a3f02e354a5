#include "table_checks.hpp"

#include <algorithm>

namespace graded_lab::detail {

bool check_square_table(const std::vector<Elem>& table, std::size_t n, const std::string& name,
                        std::vector<Violation>& out) {
  if (table.size() != n * n) {
    out.push_back({"MalformedTables", name + " table is not " + std::to_string(n) + "x" + std::to_string(n), {}});
    return false;
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= n) {
      out.push_back({"MalformedTables", name + " table entry out of range",
                     {static_cast<Elem>(i / n), static_cast<Elem>(i % n), table[i]}});
      return false;
    }
  }
  return true;
}

std::optional<Elem> find_neutral(const std::vector<Elem>& table, std::size_t n) {
  for (Elem e = 0; e < n; ++e) {
    bool neutral = true;
    for (Elem x = 0; x < n && neutral; ++x) {
      neutral = at(table, n, e, x) == x && at(table, n, x, e) == x;
    }
    if (neutral) return e;
  }
  return std::nullopt;
}

std::optional<std::vector<Elem>> check_abelian_group(const std::vector<Elem>& add, std::size_t n, Elem zero,
                                                     const std::string& what, std::vector<Violation>& out) {
  const auto before = out.size();
  for (Elem x = 0; x < n; ++x) {
    if (at(add, n, zero, x) != x || at(add, n, x, zero) != x) {
      out.push_back({"MissingIdentity", what + ": zero is not additively neutral", {zero, x}});
      break;
    }
  }
  for (Elem a = 0; a < n && out.size() == before; ++a) {
    for (Elem b = a + 1; b < n; ++b) {
      if (at(add, n, a, b) != at(add, n, b, a)) {
        out.push_back({"NonCommutative", what + ": addition is not commutative", {a, b}});
        break;
      }
    }
  }
  bool assoc = true;
  for (Elem a = 0; a < n && assoc; ++a) {
    for (Elem b = 0; b < n && assoc; ++b) {
      const Elem ab = at(add, n, a, b);
      for (Elem c = 0; c < n; ++c) {
        if (at(add, n, ab, c) != at(add, n, a, at(add, n, b, c))) {
          out.push_back({"NonAssociative", what + ": addition is not associative", {a, b, c}});
          assoc = false;
          break;
        }
      }
    }
  }
  std::vector<Elem> neg(n, 0);
  for (Elem a = 0; a < n; ++a) {
    bool found = false;
    for (Elem b = 0; b < n; ++b) {
      if (at(add, n, a, b) == zero) {
        neg[a] = b;
        found = true;
        break;
      }
    }
    if (!found) {
      out.push_back({"NoAdditiveInverse", what + ": element has no additive inverse", {a}});
      break;
    }
  }
  if (out.size() != before) return std::nullopt;
  return neg;
}

std::optional<GradingData> check_grading(const std::vector<Elem>& add, std::size_t n, Elem zero,
                                         const GradingGroup& group,
                                         const std::vector<std::vector<Elem>>& components,
                                         const std::string& what, std::vector<Violation>& out) {
  const std::size_t k = group.size();
  if (components.size() > k) {
    out.push_back({"MalformedTables", what + ": more components than grading degrees", {}});
    return std::nullopt;
  }
  GradingData data;
  data.components.assign(k, Subset(n));
  for (Degree g = 0; g < k; ++g) {
    data.components[g].insert(zero);
    if (g < components.size()) {
      for (Elem x : components[g]) {
        if (x >= n) {
          out.push_back({"MalformedTables", what + ": component member out of range", {static_cast<Elem>(g), x}});
          return std::nullopt;
        }
        data.components[g].insert(x);
      }
    }
  }
  const auto before = out.size();
  for (Degree g = 0; g < k; ++g) {
    const Subset& c = data.components[g];
    bool closed = true;
    for (Elem a : c) {
      for (Elem b : c) {
        if (!c.contains(at(add, n, a, b))) {
          out.push_back({"NotSubgroup", what + ": component " + group.label(g) + " not closed under addition",
                         {static_cast<Elem>(g), a, b}});
          closed = false;
          break;
        }
      }
      if (!closed) break;
    }
  }
  if (out.size() != before) return std::nullopt;

  // Finite subsets closed under addition are subgroups, so only the direct-sum bijection remains.
  std::vector<std::vector<Elem>> lists(k);
  std::size_t product = 1;
  for (Degree g = 0; g < k; ++g) {
    lists[g] = data.components[g].members();
    product *= lists[g].size();
    if (product > n) break;
  }
  if (product != n) {
    out.push_back({"NotDirectSum", what + ": product of component sizes differs from the carrier size",
                   {static_cast<Elem>(std::min<std::size_t>(product, 0xffffffffu)), static_cast<Elem>(n)}});
    return std::nullopt;
  }
  data.decomp.assign(n * k, zero);
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> idx(k, 0);
  for (std::size_t t = 0; t < product; ++t) {
    Elem sum = zero;
    for (Degree g = 0; g < k; ++g) sum = at(add, n, sum, lists[g][idx[g]]);
    if (seen[sum]) {
      out.push_back({"NotDirectSum", what + ": element has two decompositions into homogeneous parts", {sum}});
      return std::nullopt;
    }
    seen[sum] = true;
    for (Degree g = 0; g < k; ++g) data.decomp[sum * k + g] = lists[g][idx[g]];
    for (Degree g = 0; g < k; ++g) {
      if (++idx[g] < lists[g].size()) break;
      idx[g] = 0;
    }
  }
  data.degree.assign(n, std::nullopt);
  data.homogeneous = Subset(n);
  for (Degree g = 0; g < k; ++g) {
    for (Elem x : data.components[g]) {
      data.homogeneous.insert(x);
      if (x != zero) data.degree[x] = g;
    }
  }
  return data;
}

}  // namespace graded_lab::detail
