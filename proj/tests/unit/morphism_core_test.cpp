#include <gtest/gtest.h>

#include <set>

#include "sforge/morphism.hpp"

using namespace sforge;

namespace {

JoinMorphism img(std::vector<Elem> v) { return {std::move(v)}; }

std::vector<FiniteSemilattice> semilattices_up_to(std::size_t n) {
  std::vector<FiniteSemilattice> out;
  for (std::size_t k = 1; k <= n; ++k)
    for (auto &L : enumerate_semilattices(k))
      out.push_back(std::move(L));
  return out;
}

std::vector<FiniteLattice> lattices_up_to(std::size_t n) {
  std::vector<FiniteLattice> out;
  for (const auto &L : semilattices_up_to(n))
    if (L.is_lattice())
      out.emplace_back(L);
  return out;
}

/// All n^n self-maps filtered by the defining predicates, written out here
/// rather than through is_member.
std::vector<JoinMorphism> brute_force_class(const FiniteSemilattice &L, MorphismClass cls) {
  const std::size_t n = L.size();
  std::vector<JoinMorphism> out;
  std::vector<Elem> f(n, 0);
  for (;;) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y)
        ok = f[L.join(x, y)] == L.join(f[x], f[y]);
    const Elem top = L.top();
    if (ok && (cls == MorphismClass::JM1 || cls == MorphismClass::Res1))
      ok = f[top] == top;
    if (ok && cls != MorphismClass::JM && cls != MorphismClass::JM1) {
      const Elem bot = *L.bottom();
      ok = f[bot] == bot;
      if (ok && cls == MorphismClass::Res0)
        for (std::size_t x = 0; x < n && ok; ++x)
          ok = x == bot || f[x] != bot;
    }
    if (ok)
      out.push_back(img(f));
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++f[i] < n)
        break;
      f[i] = 0;
      if (i == 0) {
        std::sort(out.begin(), out.end());
        return out;
      }
    }
  }
}

const MorphismClass kAll[] = {MorphismClass::JM, MorphismClass::JM1, MorphismClass::Res, MorphismClass::Res1,
                              MorphismClass::Res0};

} // namespace

TEST(Generators, Examples) {
  const auto c3 = chain(3);
  EXPECT_EQ(make_f(c3, 1, 0), img({0, 0, 2}));
  EXPECT_EQ(make_f(c3, 0, 1), img({1, 2, 2}));
  EXPECT_EQ(make_k(chain(2), 0), img({0, 0}));
  EXPECT_THROW(make_f(c3, 2, 0), InputError);
  const FiniteLattice d(diamond());
  EXPECT_EQ(make_e(d, 1, 3), img({0, 0, 3, 3}));
}

TEST(Generators, FabAreTheRangeTwoMembersOfJM1) {
  for (const auto &L : semilattices_up_to(5)) {
    if (L.size() < 2)
      continue;
    std::set<JoinMorphism> fs;
    for (Elem a = 0; a < L.size(); ++a)
      if (a != L.top())
        for (Elem b = 0; b < L.size(); ++b)
          fs.insert(make_f(L, a, b));
    std::set<JoinMorphism> small;
    for (const auto &f : enumerate_morphisms(L, MorphismClass::JM1))
      if (std::set<Elem>(f.image.begin(), f.image.end()).size() <= 2)
        small.insert(f);
    EXPECT_EQ(fs, small);
  }
}

TEST(SupCompose, Basics) {
  const auto c3 = chain(3);
  const auto a = img({0, 0, 2}), b = img({0, 1, 2}), c = img({0, 2, 2});
  EXPECT_EQ(sup(c3, a, a), a);
  EXPECT_EQ(compose(identity_morphism(3), c), c);
  EXPECT_EQ(compose(b, c), c);
  EXPECT_THROW(compose(a, img({0, 1})), InputError);
}

TEST(SupCompose, ClassesAreClosed) {
  for (const auto &L : semilattices_up_to(5))
    for (MorphismClass cls : kAll) {
      if (needs_lattice(cls) && !L.is_lattice())
        continue;
      const auto maps = enumerate_morphisms(L, cls);
      const std::set<JoinMorphism> set(maps.begin(), maps.end());
      for (const auto &f : maps)
        for (const auto &g : maps) {
          ASSERT_TRUE(set.count(sup(L, f, g))) << to_string(cls);
          ASSERT_TRUE(set.count(compose(f, g))) << to_string(cls);
        }
    }
}

TEST(Enumerate, Examples) {
  const auto c3 = chain(3);
  EXPECT_EQ(enumerate_morphisms(c3, MorphismClass::Res1),
            (std::vector<JoinMorphism>{img({0, 0, 2}), img({0, 1, 2}), img({0, 2, 2})}));
  EXPECT_EQ(enumerate_morphisms(c3, MorphismClass::JM1).size(), 6u);
  EXPECT_EQ(enumerate_morphisms(chain(1), MorphismClass::JM).size(), 1u);
  EXPECT_THROW(enumerate_morphisms(antichain_with_top(2), MorphismClass::Res), InputError);
}

TEST(Enumerate, MatchesBruteForce) {
  for (const auto &L : semilattices_up_to(5))
    for (MorphismClass cls : kAll) {
      if (needs_lattice(cls) && !L.is_lattice())
        continue;
      EXPECT_EQ(enumerate_morphisms(L, cls), brute_force_class(L, cls)) << to_string(cls);
    }
}

TEST(Residual, Examples) {
  const FiniteLattice c3(chain(3));
  EXPECT_EQ(residual(c3, identity_morphism(3)), identity_morphism(3));
  EXPECT_EQ(residual(c3, img({0, 0, 2})), img({1, 1, 2}));
  EXPECT_THROW(residual(c3, img({1, 1, 2})), InputError);
  const auto res = enumerate_morphisms(c3.semilattice(), MorphismClass::Res);
  for (const auto &f : res)
    for (const auto &g : res)
      EXPECT_EQ(residual(c3, compose(f, g)), compose(residual(c3, g), residual(c3, f)));
}

TEST(Residual, GaloisLaws) {
  for (const auto &K : lattices_up_to(4)) {
    const auto &L = K.semilattice();
    const auto id = identity_morphism(K.size());
    for (const auto &f : enumerate_morphisms(L, MorphismClass::Res)) {
      const auto fp = residual(K, f);
      EXPECT_TRUE(pointwise_leq(L, id, compose(fp, f)));
      EXPECT_TRUE(pointwise_leq(L, compose(f, fp), id));
      for (Elem x = 0; x < K.size(); ++x)
        for (Elem y = 0; y < K.size(); ++y)
          EXPECT_EQ(K.leq(f(x), y), K.leq(x, fp(y)));
    }
  }
}

TEST(Residual, OmegaIsAnAntiIsomorphism) {
  for (const auto &K : lattices_up_to(4)) {
    const auto Kd = dual(K);
    const auto res = enumerate_morphisms(K.semilattice(), MorphismClass::Res);
    std::set<JoinMorphism> image;
    for (const auto &f : res) {
      const auto fp = residual(K, f);
      EXPECT_TRUE(is_member(Kd.semilattice(), fp, MorphismClass::Res));
      image.insert(fp);
      for (const auto &g : res) {
        EXPECT_EQ(residual(K, sup(K.semilattice(), f, g)), inf(K, fp, residual(K, g)));
        EXPECT_EQ(residual(K, compose(f, g)), compose(residual(K, g), fp));
      }
    }
    const auto target = enumerate_morphisms(Kd.semilattice(), MorphismClass::Res);
    EXPECT_EQ(image, std::set<JoinMorphism>(target.begin(), target.end()));

    std::set<JoinMorphism> image1;
    for (const auto &f : enumerate_morphisms(K.semilattice(), MorphismClass::Res1))
      image1.insert(residual(K, f));
    const auto res0 = enumerate_morphisms(Kd.semilattice(), MorphismClass::Res0);
    EXPECT_EQ(image1, std::set<JoinMorphism>(res0.begin(), res0.end()));
  }
}

TEST(Residual, LemmaOneComposition) {
  for (const auto &K : lattices_up_to(4)) {
    const auto &L = K.semilattice();
    for (const auto &f : enumerate_morphisms(L, MorphismClass::Res1))
      for (Elem a = 0; a < K.size(); ++a) {
        if (a == L.top())
          continue;
        Elem b = K.bottom();
        for (Elem x = 0; x < K.size(); ++x)
          if (K.leq(f(x), a))
            b = L.join(b, x);
        EXPECT_EQ(compose(make_f(L, a, K.bottom()), f), make_f(L, b, K.bottom()));
      }
  }
}

TEST(Psi, Examples) {
  const FiniteLattice d(diamond());
  EXPECT_EQ(psi_restrict(d, identity_morphism(4)), identity_morphism(3));
  const FiniteLattice c3(chain(3));
  EXPECT_EQ(enumerate_morphisms(chain(3), MorphismClass::Res0).size(),
            enumerate_morphisms(chain(2), MorphismClass::JM).size());
  EXPECT_THROW(psi_restrict(c3, img({0, 0, 2})), InputError);
}

TEST(Psi, IsAnIsomorphismOntoJMOfTheRest) {
  for (const auto &K : lattices_up_to(5)) {
    if (K.size() < 2)
      continue;
    const auto rest = remove_bottom(K);
    const auto res0 = enumerate_morphisms(K.semilattice(), MorphismClass::Res0);
    std::set<JoinMorphism> image;
    for (const auto &f : res0) {
      const auto pf = psi_restrict(K, f);
      image.insert(pf);
      for (const auto &g : res0) {
        EXPECT_EQ(psi_restrict(K, sup(K.semilattice(), f, g)), sup(rest, pf, psi_restrict(K, g)));
        EXPECT_EQ(psi_restrict(K, compose(f, g)), compose(pf, psi_restrict(K, g)));
      }
    }
    EXPECT_EQ(image.size(), res0.size());
    const auto jm = enumerate_morphisms(rest, MorphismClass::JM);
    EXPECT_EQ(image, std::set<JoinMorphism>(jm.begin(), jm.end()));
  }
}

TEST(BoxMorphism, Examples) {
  const auto L = chain(3), K = antichain_with_top(2);
  const auto box = boxtimes(L, K);
  const auto idL = identity_morphism(L.size()), idK = identity_morphism(K.size());
  EXPECT_EQ(boxtimes_morphism(L, K, box, idL, idK), identity_morphism(box.product.size()));
  for (const auto &g : enumerate_morphisms(K, MorphismClass::JM1))
    EXPECT_EQ(boxtimes_morphism(L, K, box, make_k(L, L.top()), g), make_k(box.product, box.merged));
  EXPECT_THROW(boxtimes_morphism(L, K, box, make_k(L, 0), idK), InputError);
}

TEST(BoxMorphism, InterchangeRules) {
  const auto ls = semilattices_up_to(4);
  for (const auto &L : ls)
    for (const auto &K : ls) {
      const auto box = boxtimes(L, K);
      const auto &P = box.product;
      const auto fl = enumerate_morphisms(L, MorphismClass::JM1);
      const auto gk = enumerate_morphisms(K, MorphismClass::JM1);
      for (const auto &f1 : fl)
        for (const auto &g1 : gk) {
          const auto h1 = boxtimes_morphism(L, K, box, f1, g1);
          ASSERT_TRUE(is_member(P, h1, MorphismClass::JM1));
          for (const auto &f2 : fl)
            for (const auto &g2 : gk) {
              const auto h2 = boxtimes_morphism(L, K, box, f2, g2);
              EXPECT_EQ(sup(P, h1, h2), boxtimes_morphism(L, K, box, sup(L, f1, f2), sup(K, g1, g2)));
              EXPECT_EQ(compose(h1, h2), boxtimes_morphism(L, K, box, compose(f1, f2), compose(g1, g2)));
            }
        }
    }
}
