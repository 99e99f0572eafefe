#ifndef SFORGE_BOX_CONSTRUCTION_HPP
#define SFORGE_BOX_CONSTRUCTION_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "semimodule.hpp"
#include "semiring_constructions.hpp"

namespace sforge {

using Permutation = std::vector<Elem>;

/// K is the antichain 0..n-1 under a top n. S acts on the atoms of K.
struct BoxConstructionSpec {
  FiniteSemilattice L;
  std::size_t n = 1;
  std::vector<Permutation> S;
  /// Pairs (f, g) whose f boxtimes g joins the default generators.
  std::vector<std::pair<JoinMorphism, JoinMorphism>> extra_generators;
};

inline Permutation compose_permutations(const Permutation &p, const Permutation &q) {
  Permutation r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i)
    r[i] = p[q[i]];
  return r;
}

/// The atom permutation p as a top-fixing map of K.
inline JoinMorphism permutation_on_k(const Permutation &p) {
  JoinMorphism f{p};
  f.image.push_back(static_cast<Elem>(p.size()));
  return f;
}

/// Group axioms and the free-action condition: distinct g, h never agree
/// on an atom, which is f v g = k_1 in K.
inline void validate(const BoxConstructionSpec &spec) {
  if (spec.L.size() < 2)
    throw InputError("box construction needs |L| >= 2");
  if (spec.n == 0)
    throw InputError("box construction needs n >= 1");
  if (spec.S.empty())
    throw InputError("S must be nonempty");
  const std::set<Permutation> set(spec.S.begin(), spec.S.end());
  if (set.size() != spec.S.size())
    throw InputError("S lists a permutation twice");
  for (const auto &p : spec.S) {
    if (p.size() != spec.n)
      throw InputError("permutation in S has the wrong length");
    std::vector<bool> hit(spec.n, false);
    for (Elem v : p) {
      if (v >= spec.n || hit[v])
        throw InputError("S contains a map that is not a permutation");
      hit[v] = true;
    }
  }
  if (!set.count(identity_permutation(spec.n)))
    throw InputError("S does not contain the identity");
  for (const auto &p : spec.S)
    for (const auto &q : spec.S)
      if (!set.count(compose_permutations(p, q)))
        throw InputError("S is not closed under composition");
  for (std::size_t i = 0; i < spec.S.size(); ++i)
    for (std::size_t j = i + 1; j < spec.S.size(); ++j)
      for (std::size_t x = 0; x < spec.n; ++x)
        if (spec.S[i][x] == spec.S[j][x])
          throw InputError("S does not act freely: two permutations agree on atom " + std::to_string(x));
}

/// S together with k_1, as maps of K.
inline std::vector<JoinMorphism> s_bar(const BoxConstructionSpec &spec) {
  std::vector<JoinMorphism> out;
  for (const auto &p : spec.S)
    out.push_back(permutation_on_k(p));
  out.push_back(JoinMorphism{std::vector<Elem>(spec.n + 1, static_cast<Elem>(spec.n))});
  return out;
}

/// f_{a,b} boxtimes g for a != 1_L, b in L, g in S-bar.
inline std::vector<JoinMorphism> box_generators(const BoxConstructionSpec &spec, const FiniteSemilattice &K,
                                                const BoxProduct &box) {
  const auto &L = spec.L;
  std::vector<JoinMorphism> gens;
  for (const auto &g : s_bar(spec))
    for (Elem a = 0; a < L.size(); ++a)
      for (Elem b = 0; b < L.size() && a != L.top(); ++b)
        gens.push_back(boxtimes_morphism(L, K, box, make_f(L, a, b), g));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

/// {f boxtimes g : f in JM1(L), g in S-bar}; closed under join and composition.
inline std::vector<JoinMorphism> box_ambient(const BoxConstructionSpec &spec, const FiniteSemilattice &K,
                                             const BoxProduct &box) {
  std::vector<JoinMorphism> out;
  const auto jm1 = enumerate_morphisms(spec.L, MorphismClass::JM1);
  for (const auto &g : s_bar(spec))
    for (const auto &f : jm1)
      out.push_back(boxtimes_morphism(spec.L, K, box, f, g));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// (c): every element lies above some generator f_{a,b} boxtimes g.
inline bool box_condition_c(const FiniteSemilattice &P, const std::vector<JoinMorphism> &R,
                            const std::vector<JoinMorphism> &gens) {
  for (const auto &phi : R) {
    bool above = false;
    for (const auto &g : gens)
      if (pointwise_leq(P, g, phi)) {
        above = true;
        break;
      }
    if (!above)
      return false;
  }
  return true;
}

/// (M,∨) with R acting by evaluation.
inline RSemimodule natural_semimodule(const MorphismSemiring &ms) {
  Table action(ms.maps.size(), ms.L.size());
  for (std::size_t r = 0; r < ms.maps.size(); ++r)
    for (std::size_t x = 0; x < ms.L.size(); ++x)
      action(r, x) = ms.maps[r](x);
  return RSemimodule(ms.ring, ms.L.table(), std::move(action));
}

struct BoxResult {
  FiniteSemilattice K;
  BoxProduct box;
  MorphismSemiring semiring;
  bool condition_a = false;
  bool condition_b = false;
  bool condition_c = false;
  bool simple = false;
  bool greatest_absorbing = false;
  /// Set only when |S| = n and (n > 1 or L lacks (*)).
  std::optional<bool> irreducible_without_star;
  std::string skipped;

  bool ok() const {
    return condition_a && condition_b && condition_c && simple && greatest_absorbing &&
           irreducible_without_star.value_or(true);
  }
};

inline BoxResult construct_box(const BoxConstructionSpec &spec) {
  validate(spec);
  const FiniteSemilattice K = antichain_with_top(spec.n);
  const BoxProduct box = boxtimes(spec.L, K);
  const FiniteSemilattice &P = box.product;
  auto gens = box_generators(spec, K, box);
  const auto bar = s_bar(spec);
  std::vector<JoinMorphism> seeds = gens;
  for (const auto &[f, g] : spec.extra_generators) {
    if (std::find(bar.begin(), bar.end(), g) == bar.end())
      throw InputError("extra generator uses a map of K outside S and k_1");
    seeds.push_back(boxtimes_morphism(spec.L, K, box, f, g));
  }
  BoxResult res{K, box, closure_semiring(P, seeds), false, false, false, false, false, std::nullopt, {}};
  const auto &maps = res.semiring.maps;

  const auto ambient = box_ambient(spec, K, box);
  res.condition_a = std::all_of(maps.begin(), maps.end(), [&](const JoinMorphism &phi) {
    return std::binary_search(ambient.begin(), ambient.end(), phi);
  });
  res.condition_b = std::all_of(gens.begin(), gens.end(),
                                [&](const JoinMorphism &g) { return index_of(maps, g).has_value(); });
  res.condition_c = box_condition_c(P, maps, gens);

  const auto &R = res.semiring.ring;
  res.simple = R.size() > 2 && is_simple(R);
  const auto st = structure(R);
  res.greatest_absorbing = st.greatest_left_absorbing && st.greatest_right_absorbing;

  if (spec.S.size() != spec.n)
    res.skipped = "|S| != n";
  else if (spec.n == 1 && has_star_property(spec.L).holds)
    res.skipped = "n = 1 and L has property (*)";
  else {
    const RSemimodule M = natural_semimodule(res.semiring);
    res.irreducible_without_star = irreducibility(M).irreducible() && !has_star_property(P).holds;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Regular permutation groups

/// Subgroups of Sym(n) of order n acting freely, one per conjugacy class.
/// Built by adjoining fixed-point-free permutations one at a time; every
/// intermediate subgroup of a free group acts freely, so nothing is missed.
inline std::vector<std::vector<Permutation>> regular_subgroups(std::size_t n) {
  if (n == 0 || n > 7)
    throw InputError("regular subgroup search supports 1 <= n <= 7");
  std::vector<Permutation> all;
  Permutation p = identity_permutation(n);
  do
    all.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<Permutation> derangements;
  for (const auto &q : all) {
    bool free = true;
    for (std::size_t x = 0; x < n && free; ++x)
      free = q[x] != x;
    if (free)
      derangements.push_back(q);
  }
  auto acts_freely = [&](const std::set<Permutation> &G) {
    for (auto i = G.begin(); i != G.end(); ++i)
      for (auto j = std::next(i); j != G.end(); ++j)
        for (std::size_t x = 0; x < n; ++x)
          if ((*i)[x] == (*j)[x])
            return false;
    return true;
  };
  auto generate = [&](std::set<Permutation> G, const Permutation &g) {
    std::vector<Permutation> queue(G.begin(), G.end());
    queue.push_back(g);
    G.insert(g);
    for (std::size_t i = 0; i < queue.size() && G.size() <= n; ++i)
      for (std::size_t j = 0; j <= i && G.size() <= n; ++j)
        for (const auto &c : {compose_permutations(queue[i], queue[j]), compose_permutations(queue[j], queue[i])})
          if (G.insert(c).second)
            queue.push_back(c);
    return G;
  };
  std::set<std::set<Permutation>> seen{{identity_permutation(n)}};
  std::vector<std::set<Permutation>> frontier(seen.begin(), seen.end());
  std::set<std::vector<Permutation>> canonical;
  std::vector<std::vector<Permutation>> out;
  auto record = [&](const std::set<Permutation> &G) {
    std::vector<Permutation> best;
    for (const auto &s : all) {
      const Permutation inv = invert_permutation(s);
      std::vector<Permutation> conj;
      for (const auto &g : G)
        conj.push_back(compose_permutations(compose_permutations(s, g), inv));
      std::sort(conj.begin(), conj.end());
      if (best.empty() || conj < best)
        best = std::move(conj);
    }
    if (canonical.insert(best).second)
      out.push_back(best);
  };
  if (n == 1)
    record(frontier.front());
  while (!frontier.empty()) {
    std::vector<std::set<Permutation>> next;
    for (const auto &G : frontier)
      for (const auto &d : derangements) {
        if (G.count(d))
          continue;
        auto H = generate(G, d);
        if (H.size() > n || n % H.size() != 0 || !acts_freely(H) || !seen.insert(H).second)
          continue;
        if (H.size() == n)
          record(H);
        else
          next.push_back(std::move(H));
      }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Recognition

struct BoxMatch {
  BoxConstructionSpec spec;
  MorphismSemiring semiring;
  /// iso[r] is the index in semiring.maps of the image of ring element r.
  std::vector<Elem> iso;
};

/// Searches (L, n, S) with |S| = n, (|L|-1)n + 1 = module_size and
/// (n > 1 or L without (*)) for a subsemiring of the box ambient set that
/// satisfies (a)(b)(c) and is isomorphic to R.
inline std::optional<BoxMatch> recognize_box(const FiniteSemiring &R, std::size_t module_size) {
  if (module_size < 2)
    return std::nullopt;
  for (std::size_t n = 1; n < module_size; ++n) {
    if ((module_size - 1) % n != 0)
      continue;
    const std::size_t l = (module_size - 1) / n + 1;
    for (const auto &L : enumerate_semilattices(l)) {
      if (n == 1 && has_star_property(L).holds)
        continue;
      for (const auto &S : regular_subgroups(n)) {
        BoxConstructionSpec spec{L, n, S, {}};
        const FiniteSemilattice K = antichain_with_top(n);
        const BoxProduct box = boxtimes(L, K);
        const auto gens = box_generators(spec, K, box);
        const auto ambient = box_ambient(spec, K, box);
        std::optional<BoxMatch> found;
        for_each_subsemiring(box.product, ambient, gens, [&](const std::vector<JoinMorphism> &sub) {
          if (sub.size() != R.size() || !box_condition_c(box.product, sub, gens))
            return true;
          MorphismSemiring ms = morphism_semiring(box.product, sub);
          if (auto iso = semiring_isomorphic(R, ms.ring)) {
            found = BoxMatch{spec, std::move(ms), *iso};
            return false;
          }
          return true;
        }, R.size());
        if (found)
          return found;
      }
    }
  }
  return std::nullopt;
}

} // namespace sforge

#endif // SFORGE_BOX_CONSTRUCTION_HPP
