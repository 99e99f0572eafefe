#ifndef SFORGE_CLOSURE_SYSTEM_HPP
#define SFORGE_CLOSURE_SYSTEM_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace sforge {

/// Fixed-width bitset with runtime size; ordered so it can key std::set.
class Bits {
public:
  Bits() = default;
  explicit Bits(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_)
      c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n_; ++i)
      if (test(i))
        out.push_back(i);
    return out;
  }

  /// Keep only bits with index < i.
  Bits prefix(std::size_t i) const {
    Bits b = *this;
    for (std::size_t k = i; k < n_; ++k)
      b.reset(k);
    return b;
  }

  Bits &operator|=(const Bits &o) {
    for (std::size_t w = 0; w < words_.size(); ++w)
      words_[w] |= o.words_[w];
    return *this;
  }

  auto operator<=>(const Bits &) const = default;
  bool operator==(const Bits &) const = default;

private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Enumerate every closed set of a closure operator on {0..n-1} in lectic
/// order (Ganter's NextClosure). `close` must be extensive, monotone and
/// idempotent. `visit` returns false to stop early.
inline void for_each_closed_set(std::size_t n, const std::function<Bits(const Bits &)> &close,
                                const std::function<bool(const Bits &)> &visit) {
  Bits current = close(Bits(n));
  if (!visit(current))
    return;
  for (;;) {
    bool advanced = false;
    for (std::size_t i = n; i-- > 0;) {
      if (current.test(i))
        continue;
      Bits seed = current.prefix(i);
      seed.set(i);
      Bits next = close(seed);
      if (next.prefix(i) == current.prefix(i)) {
        current = std::move(next);
        advanced = true;
        break;
      }
    }
    if (!advanced)
      return;
    if (!visit(current))
      return;
  }
}

} // namespace sforge

#endif // SFORGE_CLOSURE_SYSTEM_HPP
