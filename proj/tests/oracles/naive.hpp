#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <vector>

// Integer-arithmetic oracles. Nothing here touches the library's tables.
namespace oracle {

inline long mod(long x, long n) { return ((x % n) + n) % n; }

inline std::vector<long> divisors(long n) {
  std::vector<long> out;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

// Z_n as a module over itself, N = dZ_n.
struct Zn {
  long n, d;
  bool in_n(long m) const { return mod(m, n) % d == 0; }
  // x * m lands in N, is nonzero and m lies outside N.
  bool ngwp_pair(long x, long m) const {
    long p = mod(x * m, n);
    return p != 0 && in_n(p) && !in_n(m);
  }
  std::vector<long> gw() const {
    std::vector<long> out;
    for (long x = 0; x < n; ++x)
      for (long m = 0; m < n; ++m)
        if (ngwp_pair(x, m)) {
          out.push_back(x);
          break;
        }
    return out;
  }
  std::vector<long> g() const {
    std::vector<long> out;
    for (long x = 0; x < n; ++x)
      for (long m = 0; m < n; ++m)
        if (in_n(x * m) && !in_n(m)) {
          out.push_back(x);
          break;
        }
    return out;
  }
  // (N :_R M)
  std::vector<long> colon() const {
    std::vector<long> out;
    for (long x = 0; x < n; ++x)
      if (in_n(x)) out.push_back(x);
    return out;
  }
  // (N :_M s)
  std::vector<long> colon_module(long s) const {
    std::vector<long> out;
    for (long m = 0; m < n; ++m)
      if (in_n(s * m)) out.push_back(m);
    return out;
  }
};

inline bool is_ideal_zn(long n, const std::vector<long>& s) {
  std::set<long> set(s.begin(), s.end());
  if (!set.count(0)) return false;
  for (long a : set) {
    for (long b : set)
      if (!set.count(mod(a + b, n))) return false;
    for (long r = 0; r < n; ++r)
      if (!set.count(mod(r * a, n))) return false;
  }
  return true;
}

inline std::vector<long> with_zero(std::vector<long> s) {
  if (std::find(s.begin(), s.end(), 0L) == s.end()) s.insert(s.begin(), 0);
  std::sort(s.begin(), s.end());
  return s;
}

// Ideal-ness decided in Z_n (base ring Z_n, not Z).
inline bool weakly_primal_zn(long n, long d) { return is_ideal_zn(n, with_zero(Zn{n, d}.gw())); }
inline bool primal_zn(long n, long d) { return is_ideal_zn(n, with_zero(Zn{n, d}.g())); }

// {x : x^k in dZ_n for some 1 <= k <= n}
inline std::vector<long> radical_zn(long n, long d) {
  std::vector<long> out;
  for (long x = 0; x < n; ++x) {
    long p = 1;
    for (long k = 1; k <= n; ++k) {
      p = mod(p * x, n);
      if (p % d == 0) {
        out.push_back(x);
        break;
      }
    }
  }
  return out;
}

// 0 != xy in dZ_n forces x or y into dZ_n.
inline bool weakly_prime_ideal_zn(long n, long d) {
  for (long x = 0; x < n; ++x)
    for (long y = 0; y < n; ++y) {
      long p = mod(x * y, n);
      if (p != 0 && p % d == 0 && x % d != 0 && y % d != 0) return false;
    }
  return true;
}

// Classes of Z_n localized at S, by union-find over pairs (r, s).
inline std::size_t localized_order_zn(long n, const std::vector<long>& s) {
  const std::size_t k = s.size();
  std::vector<std::size_t> parent(static_cast<std::size_t>(n) * k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (long a = 0; a < n; ++a)
    for (std::size_t i = 0; i < k; ++i)
      for (long b = 0; b < n; ++b)
        for (std::size_t j = 0; j < k; ++j) {
          bool eq = false;
          for (long t : s)
            if (mod(t * (a * s[j] - b * s[i]), n) == 0) eq = true;
          if (eq) parent[find(static_cast<std::size_t>(a) * k + i)] = find(static_cast<std::size_t>(b) * k + j);
        }
  std::set<std::size_t> roots;
  for (std::size_t x = 0; x < parent.size(); ++x) roots.insert(find(x));
  return roots.size();
}

// Z_n[x]/(x^2 - a); element c0 + c1 x is the pair (c0, c1).
struct Quad {
  long n, a;
  struct E {
    long c0, c1;
    bool operator==(const E&) const = default;
  };
  E add(E p, E q) const { return {mod(p.c0 + q.c0, n), mod(p.c1 + q.c1, n)}; }
  E mul(E p, E q) const { return {mod(p.c0 * q.c0 + a * p.c1 * q.c1, n), mod(p.c0 * q.c1 + p.c1 * q.c0, n)}; }
  bool homogeneous(E p) const { return p.c0 == 0 || p.c1 == 0; }
  long index(E p) const { return p.c0 + n * p.c1; }
  E elem(long i) const { return {i % n, i / n}; }
  long order() const { return n * n; }
  std::size_t homogeneous_count() const { return static_cast<std::size_t>(2 * n - 1); }
};

// The Z-module Z with submodule mZ, by brute force over a window.
struct Integers {
  long m, window;
  bool in_n(long v) const { return mod(v, m) == 0; }
  bool in_gw(long x) const {
    for (long y = -window; y <= window; ++y) {
      long p = x * y;
      if (p != 0 && in_n(p) && !in_n(y)) return true;
    }
    return false;
  }
  bool in_g(long x) const {
    for (long y = -window; y <= window; ++y)
      if (in_n(x * y) && !in_n(y)) return true;
    return false;
  }
};

}  // namespace oracle
