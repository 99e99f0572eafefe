#ifndef SFORGE_SEMIRING_CONSTRUCTIONS_HPP
#define SFORGE_SEMIRING_CONSTRUCTIONS_HPP

#include <cstdlib>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "closure_system.hpp"
#include "morphism.hpp"
#include "semiring.hpp"

namespace sforge {

// ---------------------------------------------------------------------------
// Sandwich semirings

/// I = {1..m}, J = {1..n}, P an n x m 0/1 matrix indexed p[j][k].
struct SandwichSpec {
  std::size_t m = 1;
  std::size_t n = 1;
  std::vector<std::vector<int>> P{{1}};
};

inline void validate(const SandwichSpec &spec) {
  if (spec.m == 0 || spec.n == 0)
    throw InputError("sandwich dimensions must be positive");
  if (spec.P.size() != spec.n)
    throw InputError("P must have n rows");
  for (const auto &row : spec.P) {
    if (row.size() != spec.m)
      throw InputError("P must have m columns");
    for (int v : row)
      if (v != 0 && v != 1)
        throw InputError("P entries must be 0 or 1");
  }
  for (std::size_t j = 0; j < spec.n; ++j) {
    if (std::find(spec.P[j].begin(), spec.P[j].end(), 1) == spec.P[j].end())
      throw InputError("P has a zero row");
    for (std::size_t j2 = j + 1; j2 < spec.n; ++j2)
      if (spec.P[j] == spec.P[j2])
        throw InputError("P has two identical rows");
  }
  for (std::size_t k = 0; k < spec.m; ++k) {
    bool nonzero = false;
    for (std::size_t j = 0; j < spec.n; ++j)
      nonzero = nonzero || spec.P[j][k] == 1;
    if (!nonzero)
      throw InputError("P has a zero column");
    for (std::size_t k2 = k + 1; k2 < spec.m; ++k2) {
      bool same = true;
      for (std::size_t j = 0; j < spec.n && same; ++j)
        same = spec.P[j][k] == spec.P[j][k2];
      if (same)
        throw InputError("P has two identical columns");
    }
  }
}

/// (i,j) is element (i-1)*n + (j-1), infinity is last;
/// (i,j)(k,l) = (i,l) if p_{jk} = 1, infinity otherwise; x + y = infinity.
inline FiniteSemiring monico_sandwich(const SandwichSpec &spec) {
  validate(spec);
  const std::size_t size = spec.m * spec.n + 1;
  const Elem inf = static_cast<Elem>(size - 1);
  Table add = Table::square(size, inf), mul = Table::square(size, inf);
  for (std::size_t a = 0; a + 1 < size; ++a)
    for (std::size_t b = 0; b + 1 < size; ++b) {
      const std::size_t i = a / spec.n, j = a % spec.n;
      const std::size_t k = b / spec.n, l = b % spec.n;
      if (spec.P[j][k] == 1)
        mul(a, b) = static_cast<Elem>(i * spec.n + l);
    }
  return FiniteSemiring(std::move(add), std::move(mul));
}

// ---------------------------------------------------------------------------
// Groups and V(G)

/// Verifies closure, associativity, identity and inverses. Returns the
/// identity element.
inline Elem require_group(const Table &g) {
  const std::size_t n = g.rows();
  if (n == 0 || g.cols() != n || !g.entries_below(n))
    throw InputError("group table must be square with entries in range");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (g(g(x, y), z) != g(x, g(y, z)))
          throw InputError("group operation is not associative");
  std::optional<Elem> e;
  for (std::size_t x = 0; x < n && !e; ++x) {
    bool ok = true;
    for (std::size_t y = 0; y < n && ok; ++y)
      ok = g(x, y) == y && g(y, x) == y;
    if (ok)
      e = static_cast<Elem>(x);
  }
  if (!e)
    throw InputError("group has no identity");
  for (std::size_t x = 0; x < n; ++x) {
    bool has_inverse = false;
    for (std::size_t y = 0; y < n && !has_inverse; ++y)
      has_inverse = g(x, y) == *e && g(y, x) == *e;
    if (!has_inverse)
      throw InputError("group element " + std::to_string(x) + " has no inverse");
  }
  return *e;
}

inline Table cyclic_group(std::size_t k) {
  if (k == 0)
    throw InputError("group order must be positive");
  Table t = Table::square(k);
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y)
      t(x, y) = static_cast<Elem>((x + y) % k);
  return t;
}

/// V(G) = G with an absorbing infinity appended last; x + x = x and
/// x + y = infinity otherwise.
inline FiniteSemiring v_of_group(const Table &group) {
  require_group(group);
  const std::size_t g = group.rows();
  const Elem inf = static_cast<Elem>(g);
  Table add = Table::square(g + 1, inf), mul = Table::square(g + 1, inf);
  for (std::size_t x = 0; x < g; ++x) {
    add(x, x) = static_cast<Elem>(x);
    for (std::size_t y = 0; y < g; ++y)
      mul(x, y) = group(x, y);
  }
  return FiniteSemiring(std::move(add), std::move(mul));
}

// ---------------------------------------------------------------------------
// Semirings of join-morphisms

/// A semiring realized as a set of join-morphisms of L under pointwise join
/// and composition. maps is sorted, and ring uses that order as its carrier.
struct MorphismSemiring {
  FiniteSemilattice L;
  std::vector<JoinMorphism> maps;
  FiniteSemiring ring;
};

/// Index of a morphism in a sorted carrier, or nullopt.
inline std::optional<Elem> index_of(const std::vector<JoinMorphism> &maps, const JoinMorphism &f) {
  auto it = std::lower_bound(maps.begin(), maps.end(), f);
  if (it == maps.end() || *it != f)
    return std::nullopt;
  return static_cast<Elem>(it - maps.begin());
}

/// Tables of an already closed set of morphisms.
inline MorphismSemiring morphism_semiring(const FiniteSemilattice &L, std::vector<JoinMorphism> maps) {
  if (maps.empty())
    throw InputError("a semiring needs at least one morphism");
  std::sort(maps.begin(), maps.end());
  maps.erase(std::unique(maps.begin(), maps.end()), maps.end());
  for (const auto &f : maps)
    if (!is_join_morphism(L, f))
      throw InputError("map is not a join-morphism of the given semilattice");
  const std::size_t n = maps.size();
  Table add = Table::square(n), mul = Table::square(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto s = index_of(maps, sup(L, maps[i], maps[j]));
      auto c = index_of(maps, compose(maps[i], maps[j]));
      if (!s || !c)
        throw InputError("morphism set is not closed under join and composition");
      add(i, j) = *s;
      mul(i, j) = *c;
    }
  return {L, std::move(maps), FiniteSemiring(std::move(add), std::move(mul))};
}

/// Closure cap: SEMIRING_FORGE_SIZE_CAP if set to a positive integer,
/// otherwise 10000.
inline std::size_t default_size_cap() {
  if (const char *env = std::getenv("SEMIRING_FORGE_SIZE_CAP")) {
    char *end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      return static_cast<std::size_t>(v);
  }
  return 10000;
}

/// Smallest set of maps containing the generators and closed under pointwise
/// join and composition.
inline MorphismSemiring closure_semiring(const FiniteSemilattice &L, const std::vector<JoinMorphism> &generators,
                                         std::size_t cap = default_size_cap()) {
  if (generators.empty())
    throw InputError("closure needs at least one generator");
  std::set<JoinMorphism> seen;
  std::vector<JoinMorphism> items;
  auto add = [&](JoinMorphism f) {
    if (seen.insert(f).second) {
      items.push_back(std::move(f));
      if (items.size() > cap)
        throw SizeCapError("closure exceeds the size cap of " + std::to_string(cap));
    }
  };
  for (const auto &g : generators) {
    if (!is_join_morphism(L, g))
      throw InputError("generator is not a join-morphism of the given semilattice");
    add(g);
  }
  for (std::size_t i = 0; i < items.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const JoinMorphism a = items[i], b = items[j];
      add(sup(L, a, b));
      add(compose(a, b));
      add(compose(b, a));
    }
  return morphism_semiring(L, std::move(items));
}


/// Visits, in lectic order, every nonempty subset of `ambient` that contains
/// `required` and is closed under pointwise join and composition. `ambient`
/// itself must be closed. `visit` returns false to stop. Nothing is visited
/// when the closure of `required` alone exceeds `max_size`.
inline void for_each_subsemiring(const FiniteSemilattice &L, const std::vector<JoinMorphism> &ambient,
                                 const std::vector<JoinMorphism> &required,
                                 const std::function<bool(const std::vector<JoinMorphism> &)> &visit,
                                 std::size_t max_size = static_cast<std::size_t>(-1)) {
  std::vector<JoinMorphism> items = ambient;
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  const std::size_t n = items.size();
  std::vector<Elem> join_idx(n * n), comp_idx(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto s = index_of(items, sup(L, items[i], items[j]));
      auto c = index_of(items, compose(items[i], items[j]));
      if (!s || !c)
        throw InputError("ambient morphism set is not closed");
      join_idx[i * n + j] = *s;
      comp_idx[i * n + j] = *c;
    }
  Bits base(n);
  for (const auto &g : required) {
    auto i = index_of(items, g);
    if (!i)
      throw InputError("required morphism lies outside the ambient set");
    base.set(*i);
  }
  auto close = [&](const Bits &seed) {
    Bits cur = seed;
    cur |= base;
    std::vector<std::size_t> members = cur.members();
    for (std::size_t k = 0; k < members.size(); ++k)
      for (std::size_t l = 0; l <= k; ++l) {
        const std::size_t a = members[k], b = members[l];
        for (Elem c : {join_idx[a * n + b], comp_idx[a * n + b], comp_idx[b * n + a]})
          if (!cur.test(c)) {
            cur.set(c);
            members.push_back(c);
          }
      }
    return cur;
  };
  if (close(Bits(n)).count() > max_size)
    return;
  for_each_closed_set(n, close, [&](const Bits &b) {
    if (b.none() || b.count() > max_size)
      return true;
    std::vector<JoinMorphism> sub;
    for (std::size_t i : b.members())
      sub.push_back(items[i]);
    return visit(sub);
  });
}

} // namespace sforge

#endif // SFORGE_SEMIRING_CONSTRUCTIONS_HPP
