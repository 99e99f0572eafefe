#ifndef SFORGE_SEMILATTICE_HPP
#define SFORGE_SEMILATTICE_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "types.hpp"

namespace sforge {

/// A finite join-semilattice given by its join table over 0..n-1.
///
/// The order is derived (x <= y iff join(x, y) == y) and cached as a bit
/// matrix at construction. Construction validates commutativity,
/// associativity and idempotency exhaustively.
class FiniteSemilattice {
public:
  FiniteSemilattice() : FiniteSemilattice(Table::square(1, 0)) {}

  explicit FiniteSemilattice(Table join) : join_(std::move(join)) {
    const std::size_t n = join_.rows();
    if (n == 0 || join_.cols() != n)
      throw InputError("join table must be square and nonempty");
    if (!join_.entries_below(n))
      throw InputError("join table entry out of range");
    for (std::size_t x = 0; x < n; ++x) {
      if (join_(x, x) != x)
        throw InputError("join is not idempotent at " + std::to_string(x));
      for (std::size_t y = 0; y < n; ++y) {
        if (join_(x, y) != join_(y, x))
          throw InputError("join is not commutative at (" + std::to_string(x) + "," +
                           std::to_string(y) + ")");
        for (std::size_t z = 0; z < n; ++z)
          if (join_(join_(x, y), z) != join_(x, join_(y, z)))
            throw InputError("join is not associative at (" + std::to_string(x) + "," +
                             std::to_string(y) + "," + std::to_string(z) + ")");
      }
    }
    leq_.assign(n * n, 0);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        leq_[x * n + y] = join_(x, y) == y;
    top_ = 0;
    for (std::size_t x = 1; x < n; ++x)
      top_ = join_(top_, x);
    for (std::size_t x = 0; x < n; ++x) {
      bool below_all = true;
      for (std::size_t y = 0; y < n && below_all; ++y)
        below_all = leq(x, y);
      if (below_all)
        bottom_ = static_cast<Elem>(x);
    }
  }

  static FiniteSemilattice from_rows(const std::vector<std::vector<Elem>> &rows) {
    return FiniteSemilattice(Table::from_rows(rows));
  }

  std::size_t size() const { return join_.rows(); }
  Elem join(std::size_t x, std::size_t y) const { return join_(x, y); }
  bool leq(std::size_t x, std::size_t y) const { return leq_[x * size() + y] != 0; }
  bool less(std::size_t x, std::size_t y) const { return x != y && leq(x, y); }
  Elem top() const { return top_; }
  std::optional<Elem> bottom() const { return bottom_; }
  bool is_lattice() const { return bottom_.has_value(); }
  const Table &table() const { return join_; }

  bool operator==(const FiniteSemilattice &o) const { return join_ == o.join_; }

private:
  Table join_;
  std::vector<std::uint8_t> leq_;
  Elem top_ = 0;
  std::optional<Elem> bottom_;
};

/// Range-checked order test.
inline bool leq(const FiniteSemilattice &L, std::size_t x, std::size_t y) {
  if (x >= L.size() || y >= L.size())
    throw InputError("element index out of range");
  return L.leq(x, y);
}

inline Elem greatest(const FiniteSemilattice &L) { return L.top(); }
inline std::optional<Elem> least(const FiniteSemilattice &L) { return L.bottom(); }

inline std::vector<Elem> downset(const FiniteSemilattice &L, Elem x) {
  std::vector<Elem> out;
  for (std::size_t y = 0; y < L.size(); ++y)
    if (L.leq(y, x))
      out.push_back(static_cast<Elem>(y));
  return out;
}

inline std::vector<Elem> upset(const FiniteSemilattice &L, Elem x) {
  std::vector<Elem> out;
  for (std::size_t y = 0; y < L.size(); ++y)
    if (L.leq(x, y))
      out.push_back(static_cast<Elem>(y));
  return out;
}

inline std::vector<Elem> minimal_elements(const FiniteSemilattice &L) {
  std::vector<Elem> out;
  for (std::size_t x = 0; x < L.size(); ++x) {
    bool minimal = true;
    for (std::size_t y = 0; y < L.size() && minimal; ++y)
      minimal = !L.less(y, x);
    if (minimal)
      out.push_back(static_cast<Elem>(x));
  }
  return out;
}

/// Elements y < x with nothing strictly between.
inline std::vector<Elem> lower_neighbors(const FiniteSemilattice &L, Elem x) {
  std::vector<Elem> out;
  for (std::size_t y = 0; y < L.size(); ++y) {
    if (!L.less(y, x))
      continue;
    bool cover = true;
    for (std::size_t z = 0; z < L.size() && cover; ++z)
      cover = !(L.less(y, z) && L.less(z, x));
    if (cover)
      out.push_back(static_cast<Elem>(y));
  }
  return out;
}

inline std::vector<Elem> coatoms(const FiniteSemilattice &L) { return lower_neighbors(L, L.top()); }

/// x is not the join of two elements strictly below it. Minimal elements
/// qualify, so these elements generate L under binary joins.
inline bool is_join_irreducible(const FiniteSemilattice &L, Elem x) {
  for (std::size_t y = 0; y < L.size(); ++y) {
    if (!L.less(y, x))
      continue;
    for (std::size_t z = y; z < L.size(); ++z)
      if (L.less(z, x) && L.join(y, z) == x)
        return false;
  }
  return true;
}

inline std::vector<Elem> join_irreducibles(const FiniteSemilattice &L) {
  std::vector<Elem> out;
  for (std::size_t x = 0; x < L.size(); ++x)
    if (is_join_irreducible(L, static_cast<Elem>(x)))
      out.push_back(static_cast<Elem>(x));
  return out;
}

/// The unique lower neighbor of the top, present iff |L| >= 2 and the top is
/// join-irreducible.
inline std::optional<Elem> unique_lower_neighbor_of_top(const FiniteSemilattice &L) {
  if (L.size() < 2 || !is_join_irreducible(L, L.top()))
    return std::nullopt;
  auto covers = lower_neighbors(L, L.top());
  if (covers.size() != 1)
    return std::nullopt;
  return covers.front();
}

struct StarResult {
  bool holds = false;
  std::optional<Elem> witness;
};

/// Property (*): some u has u v x != top for every x != top. A witness u may
/// always be taken minimal; minimal elements are tried in index order.
inline StarResult has_star_property(const FiniteSemilattice &L) {
  const Elem top = L.top();
  for (Elem u : minimal_elements(L)) {
    bool ok = true;
    for (std::size_t x = 0; x < L.size() && ok; ++x)
      ok = x == top || L.join(u, x) != top;
    if (ok)
      return {true, u};
  }
  return {false, std::nullopt};
}

/// A finite semilattice with a least element, hence a lattice.
class FiniteLattice {
public:
  explicit FiniteLattice(FiniteSemilattice base) : base_(std::move(base)) {
    if (!base_.bottom())
      throw InputError("semilattice has no least element, so it is not a lattice");
    bottom_ = *base_.bottom();
  }

  const FiniteSemilattice &semilattice() const { return base_; }
  std::size_t size() const { return base_.size(); }
  Elem join(std::size_t x, std::size_t y) const { return base_.join(x, y); }
  bool leq(std::size_t x, std::size_t y) const { return base_.leq(x, y); }
  Elem top() const { return base_.top(); }
  Elem bottom() const { return bottom_; }

  /// Greatest lower bound: the join of all common lower bounds.
  Elem meet(std::size_t x, std::size_t y) const {
    Elem m = bottom_;
    for (std::size_t z = 0; z < size(); ++z)
      if (leq(z, x) && leq(z, y))
        m = join(m, z);
    return m;
  }

  /// Join of an arbitrary subset (bottom for the empty set).
  template <typename Range> Elem join_all(const Range &elems) const {
    Elem m = bottom_;
    for (auto e : elems)
      m = join(m, static_cast<std::size_t>(e));
    return m;
  }

  bool operator==(const FiniteLattice &o) const { return base_ == o.base_; }

private:
  FiniteSemilattice base_;
  Elem bottom_ = 0;
};

inline std::optional<FiniteLattice> as_lattice(const FiniteSemilattice &L) {
  if (!L.is_lattice())
    return std::nullopt;
  return FiniteLattice(L);
}

/// The order-reversed lattice on the same carrier; its join is the meet.
inline FiniteLattice dual(const FiniteLattice &K) {
  const std::size_t n = K.size();
  Table t = Table::square(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      t(x, y) = K.meet(x, y);
  return FiniteLattice(FiniteSemilattice(std::move(t)));
}

/// Carrier of L without its least element, in increasing index order.
inline std::vector<Elem> non_bottom_elements(const FiniteLattice &K) {
  std::vector<Elem> out;
  for (std::size_t x = 0; x < K.size(); ++x)
    if (x != K.bottom())
      out.push_back(static_cast<Elem>(x));
  return out;
}

/// L minus its least element, reindexed in increasing order of the
/// surviving indices.
inline FiniteSemilattice remove_bottom(const FiniteLattice &K) {
  if (K.size() < 2)
    throw InputError("cannot remove the bottom of a one-element lattice");
  const auto keep = non_bottom_elements(K);
  std::vector<Elem> index(K.size(), 0);
  for (std::size_t i = 0; i < keep.size(); ++i)
    index[keep[i]] = static_cast<Elem>(i);
  Table t = Table::square(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j)
      t(i, j) = index[K.join(keep[i], keep[j])];
  return FiniteSemilattice(std::move(t));
}

/// L boxtimes K with its class map. Classes [x,y] with x != 1_L, y != 1_K
/// are indexed in lexicographic order of (x, y) over non-top elements; the
/// merged class A is last.
struct BoxProduct {
  FiniteSemilattice product;
  std::size_t left_size = 0;
  std::size_t right_size = 0;
  Elem merged = 0;
  /// class_of[x * right_size + y]
  std::vector<Elem> class_of;
  /// For every class except A, its unique representative pair.
  std::vector<std::pair<Elem, Elem>> representative;

  Elem cls(Elem x, Elem y) const { return class_of[static_cast<std::size_t>(x) * right_size + y]; }
};

inline BoxProduct boxtimes(const FiniteSemilattice &L, const FiniteSemilattice &K) {
  BoxProduct box;
  box.left_size = L.size();
  box.right_size = K.size();
  const std::size_t classes = (L.size() - 1) * (K.size() - 1) + 1;
  box.merged = static_cast<Elem>(classes - 1);
  box.class_of.assign(L.size() * K.size(), box.merged);
  for (std::size_t x = 0; x < L.size(); ++x) {
    if (x == L.top())
      continue;
    for (std::size_t y = 0; y < K.size(); ++y) {
      if (y == K.top())
        continue;
      box.class_of[x * K.size() + y] = static_cast<Elem>(box.representative.size());
      box.representative.emplace_back(static_cast<Elem>(x), static_cast<Elem>(y));
    }
  }
  Table t = Table::square(classes, box.merged);
  for (std::size_t i = 0; i + 1 < classes; ++i)
    for (std::size_t j = 0; j + 1 < classes; ++j) {
      auto [x1, y1] = box.representative[i];
      auto [x2, y2] = box.representative[j];
      t(i, j) = box.cls(L.join(x1, x2), K.join(y1, y2));
    }
  box.product = FiniteSemilattice(std::move(t));
  return box;
}

// ---------------------------------------------------------------------------
// Named semilattices

/// 0 < 1 < ... < n-1.
inline FiniteSemilattice chain(std::size_t n) {
  Table t = Table::square(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      t(x, y) = static_cast<Elem>(std::max(x, y));
  return FiniteSemilattice(std::move(t));
}

/// k pairwise incomparable elements 0..k-1 below a top k.
inline FiniteSemilattice antichain_with_top(std::size_t k) {
  Table t = Table::square(k + 1, static_cast<Elem>(k));
  for (std::size_t x = 0; x <= k; ++x)
    t(x, x) = static_cast<Elem>(x);
  return FiniteSemilattice(std::move(t));
}

/// The four-element Boolean lattice 0 < a, b < 1 as 0, 1, 2, 3.
inline FiniteSemilattice diamond() {
  return FiniteSemilattice::from_rows({{0, 1, 2, 3}, {1, 1, 3, 3}, {2, 3, 2, 3}, {3, 3, 3, 3}});
}

// ---------------------------------------------------------------------------
// Canonical form and isomorphism

struct CanonicalForm {
  Table table;
  /// labeling[old] = new index in the canonical table.
  std::vector<Elem> labeling;
  /// Automorphisms of the input, as maps old -> old.
  std::vector<std::vector<Elem>> automorphisms;
};

namespace detail {

/// Calls `visit` with every labeling old -> new that places elements in
/// nondecreasing order of `key`, permuting freely inside equal-key classes.
template <typename Key>
void for_each_invariant_labeling(const std::vector<Key> &key,
                                 const std::function<void(const std::vector<Elem> &)> &visit) {
  const std::size_t n = key.size();
  std::vector<Elem> order = identity_permutation(n);
  std::stable_sort(order.begin(), order.end(), [&](Elem a, Elem b) { return key[a] < key[b]; });
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && key[order[j]] == key[order[i]])
      ++j;
    ranges.emplace_back(i, j);
    i = j;
  }
  std::vector<Elem> labeling(n);
  std::function<void(std::size_t)> rec = [&](std::size_t r) {
    if (r == ranges.size()) {
      for (std::size_t pos = 0; pos < n; ++pos)
        labeling[order[pos]] = static_cast<Elem>(pos);
      visit(labeling);
      return;
    }
    auto [lo, hi] = ranges[r];
    std::sort(order.begin() + static_cast<std::ptrdiff_t>(lo), order.begin() + static_cast<std::ptrdiff_t>(hi));
    do {
      rec(r + 1);
    } while (std::next_permutation(order.begin() + static_cast<std::ptrdiff_t>(lo),
                                   order.begin() + static_cast<std::ptrdiff_t>(hi)));
  };
  rec(0);
}

} // namespace detail

/// Lex-minimal join table over all relabelings that order elements by
/// (down-set size, up-set size); records every labeling attaining it.
inline CanonicalForm canonical_form(const FiniteSemilattice &L) {
  const std::size_t n = L.size();
  std::vector<std::tuple<std::size_t, std::size_t>> key(n);
  for (std::size_t x = 0; x < n; ++x)
    key[x] = {downset(L, static_cast<Elem>(x)).size(), upset(L, static_cast<Elem>(x)).size()};
  CanonicalForm best;
  std::vector<std::vector<Elem>> attaining;
  bool first = true;
  detail::for_each_invariant_labeling<std::tuple<std::size_t, std::size_t>>(
      key, [&](const std::vector<Elem> &lab) {
        Table t = relabel(L.table(), lab);
        if (first || t < best.table) {
          best.table = std::move(t);
          best.labeling = lab;
          attaining.assign(1, lab);
          first = false;
        } else if (t == best.table) {
          attaining.push_back(lab);
        }
      });
  const auto inv0 = invert_permutation(best.labeling);
  for (const auto &lab : attaining) {
    std::vector<Elem> aut(n);
    for (std::size_t x = 0; x < n; ++x)
      aut[x] = inv0[lab[x]];
    best.automorphisms.push_back(std::move(aut));
  }
  std::sort(best.automorphisms.begin(), best.automorphisms.end());
  return best;
}

/// A join-preserving bijection L -> K, if one exists.
inline std::optional<std::vector<Elem>> semilattice_isomorphic(const FiniteSemilattice &L,
                                                              const FiniteSemilattice &K) {
  if (L.size() != K.size())
    return std::nullopt;
  auto cl = canonical_form(L);
  auto ck = canonical_form(K);
  if (cl.table != ck.table)
    return std::nullopt;
  const auto kinv = invert_permutation(ck.labeling);
  std::vector<Elem> iso(L.size());
  for (std::size_t x = 0; x < L.size(); ++x)
    iso[x] = kinv[cl.labeling[x]];
  return iso;
}

// ---------------------------------------------------------------------------
// Isomorph-free enumeration

namespace detail {

/// Extend L by a new minimal element m (index n) whose strict up-set is the
/// up-closed set `up`. Fails when some x has no least element in up ∩ x↑.
inline std::optional<FiniteSemilattice> extend_below(const FiniteSemilattice &L, const std::vector<bool> &up) {
  const std::size_t n = L.size();
  Table t = Table::square(n + 1);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      t(x, y) = L.join(x, y);
  t(n, n) = static_cast<Elem>(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::optional<Elem> least_above;
    for (std::size_t u = 0; u < n; ++u) {
      if (!up[u] || !L.leq(x, u))
        continue;
      bool is_least = true;
      for (std::size_t v = 0; v < n && is_least; ++v)
        is_least = !(up[v] && L.leq(x, v)) || L.leq(u, v);
      if (is_least) {
        least_above = static_cast<Elem>(u);
        break;
      }
    }
    if (!least_above)
      return std::nullopt;
    t(n, x) = t(x, n) = *least_above;
  }
  try {
    return FiniteSemilattice(std::move(t));
  } catch (const InputError &) {
    return std::nullopt;
  }
}

} // namespace detail

/// One representative per isomorphism class of n-element join-semilattices,
/// each in canonical form, sorted by join table.
///
/// Orderly generation by canonical augmentation: every semilattice arises
/// from a smaller one by adjoining a minimal element. A child is kept only
/// when its augmenting up-set is orbit-minimal under the parent's
/// automorphisms and the new element lies in the orbit of the child's
/// canonical deletion point (the minimal element with the largest canonical
/// label).
inline std::vector<FiniteSemilattice> enumerate_semilattices(std::size_t n) {
  if (n == 0)
    throw InputError("semilattice size must be positive");
  std::vector<FiniteSemilattice> level{FiniteSemilattice(Table::square(1, 0))};
  for (std::size_t size = 1; size < n; ++size) {
    std::vector<FiniteSemilattice> next;
    for (const auto &parent : level) {
      const auto pcanon = canonical_form(parent);
      const std::size_t mask_count = std::size_t{1} << size;
      for (std::size_t mask = 1; mask < mask_count; ++mask) {
        std::vector<bool> up(size);
        for (std::size_t x = 0; x < size; ++x)
          up[x] = (mask >> x) & 1u;
        bool closed = true;
        for (std::size_t x = 0; x < size && closed; ++x)
          for (std::size_t y = 0; y < size && closed; ++y)
            if (up[x] && parent.leq(x, y) && !up[y])
              closed = false;
        if (!closed)
          continue;
        bool orbit_min = true;
        for (const auto &aut : pcanon.automorphisms) {
          std::size_t image = 0;
          for (std::size_t x = 0; x < size; ++x)
            if (up[x])
              image |= std::size_t{1} << aut[x];
          if (image < mask) {
            orbit_min = false;
            break;
          }
        }
        if (!orbit_min)
          continue;
        auto child = detail::extend_below(parent, up);
        if (!child)
          continue;
        const auto ccanon = canonical_form(*child);
        Elem deletion = 0;
        bool have = false;
        for (Elem m : minimal_elements(*child))
          if (!have || ccanon.labeling[m] > ccanon.labeling[deletion]) {
            deletion = m;
            have = true;
          }
        const bool accepted = std::any_of(ccanon.automorphisms.begin(), ccanon.automorphisms.end(),
                                          [&](const auto &aut) { return aut[size] == deletion; });
        if (accepted)
          next.emplace_back(ccanon.table);
      }
    }
    std::sort(next.begin(), next.end(),
              [](const FiniteSemilattice &a, const FiniteSemilattice &b) { return a.table() < b.table(); });
    level = std::move(next);
  }
  return level;
}

} // namespace sforge

#endif // SFORGE_SEMILATTICE_HPP
