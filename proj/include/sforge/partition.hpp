#ifndef SFORGE_PARTITION_HPP
#define SFORGE_PARTITION_HPP

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "types.hpp"

namespace sforge {

/// Equivalence relation on 0..n-1 stored as a normalized block id per
/// element: block ids appear in order of first occurrence.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<Elem> blocks) : block_(std::move(blocks)) { normalize(); }

  static Partition identity(std::size_t n) { return Partition(identity_permutation(n)); }
  static Partition full(std::size_t n) { return Partition(std::vector<Elem>(n, 0)); }

  std::size_t size() const { return block_.size(); }
  Elem block(std::size_t x) const { return block_[x]; }
  const std::vector<Elem> &blocks() const { return block_; }
  bool related(std::size_t x, std::size_t y) const { return block_[x] == block_[y]; }

  std::size_t block_count() const {
    Elem m = 0;
    for (Elem b : block_)
      m = std::max<Elem>(m, static_cast<Elem>(b + 1));
    return block_.empty() ? 0 : m;
  }
  bool is_identity() const { return block_count() == block_.size(); }
  bool is_full() const { return block_count() <= 1; }

  /// Members of each block, blocks in id order, members ascending.
  std::vector<std::vector<Elem>> classes() const {
    std::vector<std::vector<Elem>> out(block_count());
    for (std::size_t x = 0; x < block_.size(); ++x)
      out[block_[x]].push_back(static_cast<Elem>(x));
    return out;
  }

  /// Coarser-or-equal test: every pair related here is related in `o`.
  bool refines(const Partition &o) const {
    for (std::size_t x = 0; x < size(); ++x)
      for (std::size_t y = x + 1; y < size(); ++y)
        if (related(x, y) && !o.related(x, y))
          return false;
    return true;
  }

  auto operator<=>(const Partition &) const = default;
  bool operator==(const Partition &) const = default;

private:
  void normalize() {
    std::vector<Elem> remap(block_.size() + 1, static_cast<Elem>(0xFFFF));
    Elem next = 0;
    for (Elem &b : block_) {
      if (b >= remap.size())
        remap.resize(b + 1u, static_cast<Elem>(0xFFFF));
      if (remap[b] == 0xFFFF)
        remap[b] = next++;
      b = remap[b];
    }
  }

  std::vector<Elem> block_;
};

/// Union-find with path halving and union by size.
class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t i) {
    while (parent_[i] != i)
      i = parent_[i] = parent_[parent_[i]];
    return i;
  }

  /// Returns true if a merge happened.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    if (size_[a] < size_[b])
      std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  Partition to_partition() {
    std::vector<Elem> blocks(parent_.size());
    for (std::size_t i = 0; i < parent_.size(); ++i)
      blocks[i] = static_cast<Elem>(find(i));
    return Partition(std::move(blocks));
  }

private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

/// Smallest equivalence containing `base` and the `seeds` pairs that is
/// compatible with every unary map in `maps` (x ~ y implies f(x) ~ f(y)).
/// Works from a queue of merged pairs until fixpoint.
inline Partition close_equivalence(const Partition &base,
                                   const std::vector<std::pair<Elem, Elem>> &seeds,
                                   const std::vector<std::vector<Elem>> &maps) {
  const std::size_t n = base.size();
  UnionFind uf(n);
  std::vector<std::pair<Elem, Elem>> queue;
  auto merge = [&](Elem a, Elem b) {
    if (uf.unite(a, b))
      queue.emplace_back(a, b);
  };
  for (const auto &cls : base.classes())
    for (std::size_t k = 1; k < cls.size(); ++k)
      merge(cls[0], cls[k]);
  for (const auto &[a, b] : seeds)
    merge(a, b);
  while (!queue.empty()) {
    auto [a, b] = queue.back();
    queue.pop_back();
    for (const auto &f : maps)
      merge(f[a], f[b]);
  }
  return uf.to_partition();
}

/// True if `p` is compatible with every map.
inline bool is_compatible(const Partition &p, const std::vector<std::vector<Elem>> &maps) {
  for (const auto &cls : p.classes())
    for (std::size_t k = 1; k < cls.size(); ++k)
      for (const auto &f : maps)
        if (!p.related(f[cls[0]], f[cls[k]]))
          return false;
  return true;
}

/// All compatible equivalences, obtained by closing joins of principal ones.
/// Sorted by normalized block vector: the full relation first, identity last.
inline std::vector<Partition> all_compatible_equivalences(std::size_t n,
                                                          const std::vector<std::vector<Elem>> &maps) {
  std::vector<Partition> queue{Partition::identity(n)};
  std::set<Partition> seen(queue.begin(), queue.end());
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const Partition cur = queue[k];
    for (Elem a = 0; a < n; ++a)
      for (Elem b = static_cast<Elem>(a + 1); b < n; ++b) {
        if (cur.related(a, b))
          continue;
        Partition next = close_equivalence(cur, {{a, b}}, maps);
        if (seen.insert(next).second)
          queue.push_back(std::move(next));
      }
  }
  return {seen.begin(), seen.end()};
}

} // namespace sforge

#endif // SFORGE_PARTITION_HPP
