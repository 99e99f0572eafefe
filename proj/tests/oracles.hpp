#ifndef SFORGE_TESTS_ORACLES_HPP
#define SFORGE_TESTS_ORACLES_HPP

// Brute-force reference implementations. They share nothing with the
// library beyond plain tables, so agreement is meaningful.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Tab = std::vector<int>; // n*n, row-major

inline int at(const Tab &t, int n, int x, int y) { return t[x * n + y]; }

/// Visits every set partition of {0..n-1} as a restricted growth string.
inline void for_each_partition(int n, const std::function<void(const std::vector<int> &)> &visit) {
  std::vector<int> a(n, 0);
  std::function<void(int, int)> rec = [&](int i, int maxb) {
    if (i == n) {
      visit(a);
      return;
    }
    for (int b = 0; b <= maxb + 1; ++b) {
      a[i] = b;
      rec(i + 1, std::max(maxb, b));
    }
  };
  if (n == 0) {
    visit(a);
    return;
  }
  a[0] = 0;
  rec(1, 0);
}

/// Partition p is a congruence of (add, mul) when it is compatible with
/// every translation of both operations.
inline bool is_congruence(const Tab &add, const Tab &mul, int n, const std::vector<int> &p) {
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (p[x] != p[y])
        continue;
      for (int t = 0; t < n; ++t) {
        if (p[at(add, n, x, t)] != p[at(add, n, y, t)])
          return false;
        if (p[at(mul, n, x, t)] != p[at(mul, n, y, t)])
          return false;
        if (p[at(mul, n, t, x)] != p[at(mul, n, t, y)])
          return false;
      }
    }
  return true;
}

/// Simple: the only congruences are the identity and the full relation.
inline bool is_simple(const Tab &add, const Tab &mul, int n) {
  bool simple = true;
  for_each_partition(n, [&](const std::vector<int> &p) {
    const int blocks = *std::max_element(p.begin(), p.end()) + 1;
    if (blocks == 1 || blocks == n)
      return;
    if (is_congruence(add, mul, n, p))
      simple = false;
  });
  return simple;
}

inline std::size_t congruence_count(const Tab &add, const Tab &mul, int n) {
  std::size_t c = 0;
  for_each_partition(n, [&](const std::vector<int> &p) { c += is_congruence(add, mul, n, p) ? 1 : 0; });
  return c;
}

/// Every table over n elements, as base-n odometer.
inline void for_each_table(int n, const std::function<void(const Tab &)> &visit) {
  Tab t(n * n, 0);
  for (;;) {
    visit(t);
    int i = 0;
    while (i < n * n && ++t[i] == n)
      t[i++] = 0;
    if (i == n * n)
      return;
  }
}

inline bool associative(const Tab &t, int n) {
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (at(t, n, at(t, n, x, y), z) != at(t, n, x, at(t, n, y, z)))
          return false;
  return true;
}

inline bool commutative(const Tab &t, int n) {
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (at(t, n, x, y) != at(t, n, y, x))
        return false;
  return true;
}

inline bool idempotent(const Tab &t, int n) {
  for (int x = 0; x < n; ++x)
    if (at(t, n, x, x) != x)
      return false;
  return true;
}

inline bool distributive(const Tab &add, const Tab &mul, int n) {
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (at(mul, n, x, at(add, n, y, z)) != at(add, n, at(mul, n, x, y), at(mul, n, x, z)))
          return false;
        if (at(mul, n, at(add, n, y, z), x) != at(add, n, at(mul, n, y, x), at(mul, n, z, x)))
          return false;
      }
  return true;
}

/// Image of a table under the relabeling x -> p[x].
inline Tab permute(const Tab &t, int n, const std::vector<int> &p) {
  Tab out(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      out[p[x] * n + p[y]] = p[at(t, n, x, y)];
  return out;
}

struct NaiveCounts {
  std::size_t all = 0;    // additively idempotent semirings up to isomorphism
  std::size_t simple = 0; // of which simple
};

/// Additively idempotent semirings of order n by trying every pair of an
/// idempotent commutative semigroup table and a semigroup table, then
/// deduplicating pairs under all n! relabelings.
inline NaiveCounts naive_semiring_counts(int n) {
  std::vector<Tab> adds, muls;
  for_each_table(n, [&](const Tab &t) {
    if (associative(t, n)) {
      muls.push_back(t);
      if (commutative(t, n) && idempotent(t, n))
        adds.push_back(t);
    }
  });
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do
    perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::set<std::pair<Tab, Tab>> seen;
  NaiveCounts c;
  for (const auto &a : adds)
    for (const auto &m : muls) {
      if (!distributive(a, m, n))
        continue;
      std::pair<Tab, Tab> best{a, m};
      for (const auto &q : perms)
        best = std::min(best, std::make_pair(permute(a, n, q), permute(m, n, q)));
      if (!seen.insert(best).second)
        continue;
      ++c.all;
      if (is_simple(a, m, n))
        ++c.simple;
    }
  return c;
}

/// Join-semilattices of order n up to isomorphism, via every partial order
/// given as a relation bitmask, kept when all binary joins exist, then
/// deduplicated under relabeling.
inline std::size_t naive_semilattice_count(int n) {
  const int pairs = n * (n - 1);
  std::vector<std::pair<int, int>> off;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y)
        off.emplace_back(x, y);
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do
    perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::set<std::vector<std::uint8_t>> seen;
  std::vector<std::uint8_t> le(n * n);
  for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
    std::fill(le.begin(), le.end(), 0);
    for (int x = 0; x < n; ++x)
      le[x * n + x] = 1;
    for (int i = 0; i < pairs; ++i)
      if (mask >> i & 1)
        le[off[i].first * n + off[i].second] = 1;
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y) {
        if (x != y && le[x * n + y] && le[y * n + x])
          ok = false;
        for (int z = 0; z < n && ok; ++z)
          if (le[x * n + y] && le[y * n + z] && !le[x * n + z])
            ok = false;
      }
    // Every pair needs a least upper bound.
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y) {
        int lub = -1;
        for (int u = 0; u < n; ++u) {
          if (!le[x * n + u] || !le[y * n + u])
            continue;
          bool least = true;
          for (int v = 0; v < n && least; ++v)
            if (le[x * n + v] && le[y * n + v] && !le[u * n + v])
              least = false;
          if (least)
            lub = u;
        }
        ok = lub >= 0;
      }
    if (!ok)
      continue;
    std::vector<std::uint8_t> best(n * n, 2);
    for (const auto &q : perms) {
      std::vector<std::uint8_t> img(n * n);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          img[q[x] * n + q[y]] = le[x * n + y];
      best = std::min(best, img);
    }
    seen.insert(best);
  }
  return seen.size();
}

} // namespace oracle

#endif // SFORGE_TESTS_ORACLES_HPP
