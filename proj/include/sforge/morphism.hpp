#ifndef SFORGE_MORPHISM_HPP
#define SFORGE_MORPHISM_HPP

#include <algorithm>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "semilattice.hpp"

namespace sforge {

/// A total self-map of a semilattice carrier stored as its image sequence.
/// Ordered lexicographically by image.
struct JoinMorphism {
  std::vector<Elem> image;

  std::size_t size() const { return image.size(); }
  Elem operator()(std::size_t x) const { return image[x]; }

  auto operator<=>(const JoinMorphism &) const = default;
  bool operator==(const JoinMorphism &) const = default;
};

enum class MorphismClass { JM, JM1, Res, Res1, Res0 };

inline std::string_view to_string(MorphismClass c) {
  switch (c) {
  case MorphismClass::JM: return "JM";
  case MorphismClass::JM1: return "JM1";
  case MorphismClass::Res: return "Res";
  case MorphismClass::Res1: return "Res1";
  case MorphismClass::Res0: return "Res0";
  }
  return "?";
}

inline bool needs_lattice(MorphismClass c) {
  return c == MorphismClass::Res || c == MorphismClass::Res1 || c == MorphismClass::Res0;
}

inline bool is_join_morphism(const FiniteSemilattice &L, const JoinMorphism &f) {
  if (f.size() != L.size())
    return false;
  for (Elem v : f.image)
    if (v >= L.size())
      return false;
  for (std::size_t x = 0; x < L.size(); ++x)
    for (std::size_t y = x + 1; y < L.size(); ++y)
      if (f(L.join(x, y)) != L.join(f(x), f(y)))
        return false;
  return true;
}

/// Membership in one of the five morphism classes. The Res classes use the
/// finite characterization: a join-morphism fixing the least element.
inline bool is_member(const FiniteSemilattice &L, const JoinMorphism &f, MorphismClass c) {
  if (!is_join_morphism(L, f))
    return false;
  const Elem top = L.top();
  switch (c) {
  case MorphismClass::JM: return true;
  case MorphismClass::JM1: return f(top) == top;
  default: break;
  }
  if (!L.bottom())
    return false;
  const Elem bot = *L.bottom();
  if (f(bot) != bot)
    return false;
  if (c == MorphismClass::Res1)
    return f(top) == top;
  if (c == MorphismClass::Res0)
    for (std::size_t x = 0; x < L.size(); ++x)
      if (f(x) == bot && x != bot)
        return false;
  return true;
}

inline void require_same_size(const JoinMorphism &f, const JoinMorphism &g) {
  if (f.size() != g.size())
    throw InputError("morphisms act on carriers of different sizes");
}

inline JoinMorphism identity_morphism(std::size_t n) { return {identity_permutation(n)}; }

/// k_a: constant map to a.
inline JoinMorphism make_k(const FiniteSemilattice &L, Elem a) {
  if (a >= L.size())
    throw InputError("k_a: index out of range");
  return {std::vector<Elem>(L.size(), a)};
}

/// f_{a,b}: b on the down-set of a, top elsewhere. Requires a != top.
inline JoinMorphism make_f(const FiniteSemilattice &L, Elem a, Elem b) {
  if (a >= L.size() || b >= L.size())
    throw InputError("f_{a,b}: index out of range");
  if (a == L.top())
    throw InputError("f_{a,b} requires a to differ from the greatest element");
  JoinMorphism f{std::vector<Elem>(L.size(), L.top())};
  for (std::size_t x = 0; x < L.size(); ++x)
    if (L.leq(x, a))
      f.image[x] = b;
  return f;
}

/// e_{a,b}: bottom on the down-set of a, b elsewhere.
inline JoinMorphism make_e(const FiniteLattice &K, Elem a, Elem b) {
  if (a >= K.size() || b >= K.size())
    throw InputError("e_{a,b}: index out of range");
  JoinMorphism e{std::vector<Elem>(K.size(), b)};
  for (std::size_t x = 0; x < K.size(); ++x)
    if (K.leq(x, a))
      e.image[x] = K.bottom();
  return e;
}

/// Pointwise join.
inline JoinMorphism sup(const FiniteSemilattice &L, const JoinMorphism &f, const JoinMorphism &g) {
  require_same_size(f, g);
  if (f.size() != L.size())
    throw InputError("morphism does not act on this semilattice");
  JoinMorphism h{std::vector<Elem>(f.size())};
  for (std::size_t x = 0; x < f.size(); ++x)
    h.image[x] = L.join(f(x), g(x));
  return h;
}

/// Pointwise meet in a lattice (the join of the dual lattice).
inline JoinMorphism inf(const FiniteLattice &K, const JoinMorphism &f, const JoinMorphism &g) {
  require_same_size(f, g);
  JoinMorphism h{std::vector<Elem>(f.size())};
  for (std::size_t x = 0; x < f.size(); ++x)
    h.image[x] = K.meet(f(x), g(x));
  return h;
}

/// (f o g)(x) = f(g(x)).
inline JoinMorphism compose(const JoinMorphism &f, const JoinMorphism &g) {
  require_same_size(f, g);
  JoinMorphism h{std::vector<Elem>(f.size())};
  for (std::size_t x = 0; x < f.size(); ++x)
    h.image[x] = f(g(x));
  return h;
}

/// Pointwise order f <= g.
inline bool pointwise_leq(const FiniteSemilattice &L, const JoinMorphism &f, const JoinMorphism &g) {
  for (std::size_t x = 0; x < f.size(); ++x)
    if (!L.leq(f(x), g(x)))
      return false;
  return true;
}

/// Residual f+(y) = join{x | f(x) <= y}; a join-morphism of the dual lattice.
inline JoinMorphism residual(const FiniteLattice &K, const JoinMorphism &f) {
  if (!is_member(K.semilattice(), f, MorphismClass::Res))
    throw InputError("residual requires a residuated map");
  JoinMorphism r{std::vector<Elem>(K.size())};
  for (std::size_t y = 0; y < K.size(); ++y) {
    Elem acc = K.bottom();
    for (std::size_t x = 0; x < K.size(); ++x)
      if (K.leq(f(x), y))
        acc = K.join(acc, x);
    r.image[y] = acc;
  }
  return r;
}

/// Restriction of f in Res0(K) to K without its least element, reindexed as
/// in remove_bottom.
inline JoinMorphism psi_restrict(const FiniteLattice &K, const JoinMorphism &f) {
  if (!is_member(K.semilattice(), f, MorphismClass::Res0))
    throw InputError("restriction requires a member of Res0 (no nonzero element maps to zero)");
  const auto keep = non_bottom_elements(K);
  std::vector<Elem> index(K.size(), 0);
  for (std::size_t i = 0; i < keep.size(); ++i)
    index[keep[i]] = static_cast<Elem>(i);
  JoinMorphism r{std::vector<Elem>(keep.size())};
  for (std::size_t i = 0; i < keep.size(); ++i)
    r.image[i] = index[f(keep[i])];
  return r;
}

/// (f boxtimes g)([x,y]) = [f(x), g(y)]; both maps must fix their tops.
inline JoinMorphism boxtimes_morphism(const FiniteSemilattice &L, const FiniteSemilattice &K,
                                      const BoxProduct &box, const JoinMorphism &f, const JoinMorphism &g) {
  if (!is_member(L, f, MorphismClass::JM1) || !is_member(K, g, MorphismClass::JM1))
    throw InputError("boxtimes of morphisms requires top-preserving join-morphisms");
  JoinMorphism h{std::vector<Elem>(box.product.size(), box.merged)};
  for (std::size_t c = 0; c < box.representative.size(); ++c) {
    auto [x, y] = box.representative[c];
    h.image[c] = box.cls(f(x), g(y));
  }
  return h;
}

/// Every member of the class in lexicographic order of images.
///
/// Images are chosen on join-irreducible elements only (they generate L
/// under joins), constrained to be monotone among themselves, extended by
/// joins and then checked exhaustively.
inline std::vector<JoinMorphism> enumerate_morphisms(const FiniteSemilattice &L, MorphismClass cls) {
  if (needs_lattice(cls) && !L.is_lattice())
    throw InputError(std::string(to_string(cls)) + " requires a lattice");
  const std::size_t n = L.size();
  auto gens = join_irreducibles(L);
  std::stable_sort(gens.begin(), gens.end(),
                   [&](Elem a, Elem b) { return downset(L, a).size() < downset(L, b).size(); });
  std::vector<std::vector<Elem>> gens_below(n);
  for (std::size_t x = 0; x < n; ++x)
    for (Elem g : gens)
      if (L.leq(g, x))
        gens_below[x].push_back(g);

  std::vector<JoinMorphism> out;
  std::vector<Elem> assigned(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == gens.size()) {
      JoinMorphism f{std::vector<Elem>(n)};
      for (std::size_t x = 0; x < n; ++x) {
        Elem acc = assigned[gens_below[x].front()];
        for (Elem g : gens_below[x])
          acc = L.join(acc, assigned[g]);
        f.image[x] = acc;
      }
      if (is_member(L, f, cls))
        out.push_back(std::move(f));
      return;
    }
    const Elem g = gens[k];
    for (std::size_t v = 0; v < n; ++v) {
      if (needs_lattice(cls) && g == *L.bottom() && v != *L.bottom())
        continue;
      bool monotone = true;
      for (std::size_t j = 0; j < k && monotone; ++j) {
        const Elem h = gens[j];
        if (L.leq(h, g) && !L.leq(assigned[h], v))
          monotone = false;
      }
      if (!monotone)
        continue;
      assigned[g] = static_cast<Elem>(v);
      rec(k + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace sforge

#endif // SFORGE_MORPHISM_HPP
