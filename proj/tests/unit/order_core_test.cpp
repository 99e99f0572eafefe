#include <gtest/gtest.h>

#include "../oracles.hpp"
#include "sforge/semilattice.hpp"

using namespace sforge;

namespace {

FiniteSemilattice vee() { return antichain_with_top(2); }

std::vector<FiniteSemilattice> all_semilattices_up_to(std::size_t n) {
  std::vector<FiniteSemilattice> out;
  for (std::size_t k = 1; k <= n; ++k)
    for (auto &L : enumerate_semilattices(k))
      out.push_back(std::move(L));
  return out;
}

} // namespace

TEST(Leq, ChainAndVee) {
  const auto c3 = chain(3);
  EXPECT_TRUE(leq(c3, 0, 2));
  EXPECT_FALSE(leq(c3, 2, 0));
  EXPECT_FALSE(leq(vee(), 0, 1));
  EXPECT_THROW(leq(c3, 0, 3), InputError);
}

TEST(Leq, RejectsBrokenTables) {
  EXPECT_THROW(FiniteSemilattice::from_rows({{0, 1}, {0, 1}}), InputError); // not commutative
  EXPECT_THROW(FiniteSemilattice::from_rows({{1, 1}, {1, 1}}), InputError); // not idempotent
  EXPECT_THROW(FiniteSemilattice::from_rows({{0, 2}, {2, 1}}), InputError); // out of range
}

TEST(OrderQueries, Examples) {
  EXPECT_TRUE(is_join_irreducible(chain(3), 2));
  const auto d = diamond();
  EXPECT_FALSE(is_join_irreducible(d, 3));
  EXPECT_EQ(coatoms(chain(4)), std::vector<Elem>({2}));
  EXPECT_EQ(greatest(d), 3);
  EXPECT_EQ(least(d), Elem{0});
  EXPECT_FALSE(least(vee()).has_value());
  EXPECT_EQ(minimal_elements(vee()), std::vector<Elem>({0, 1}));
  EXPECT_EQ(downset(d, 1), std::vector<Elem>({0, 1}));
  EXPECT_EQ(upset(d, 1), std::vector<Elem>({1, 3}));
  EXPECT_EQ(unique_lower_neighbor_of_top(chain(4)), Elem{2});
  EXPECT_FALSE(unique_lower_neighbor_of_top(d).has_value());
}

TEST(OrderQueries, DerivedOrderIsPartialOrder) {
  for (const auto &L : all_semilattices_up_to(5)) {
    const std::size_t n = L.size();
    for (std::size_t x = 0; x < n; ++x) {
      EXPECT_TRUE(L.leq(x, x));
      for (std::size_t y = 0; y < n; ++y) {
        if (x != y)
          EXPECT_FALSE(L.leq(x, y) && L.leq(y, x));
        for (std::size_t z = 0; z < n; ++z)
          if (L.leq(x, y) && L.leq(y, z))
            EXPECT_TRUE(L.leq(x, z));
      }
    }
  }
}

TEST(Star, Examples) {
  const auto lat = has_star_property(diamond());
  EXPECT_TRUE(lat.holds);
  EXPECT_EQ(lat.witness, Elem{0});
  EXPECT_TRUE(has_star_property(chain(3)).holds);
  const auto v = has_star_property(vee());
  EXPECT_FALSE(v.holds);
  EXPECT_FALSE(v.witness.has_value());
}

TEST(Star, HoldsWithBottomOrJoinIrreducibleTop) {
  for (const auto &L : all_semilattices_up_to(6)) {
    const auto s = has_star_property(L);
    if (L.is_lattice() || is_join_irreducible(L, L.top()))
      EXPECT_TRUE(s.holds);
    if (s.holds) {
      for (std::size_t x = 0; x < L.size(); ++x)
        if (x != L.top())
          EXPECT_NE(L.join(*s.witness, x), L.top());
    }
  }
}

TEST(Dual, Involution) {
  const FiniteLattice c2(chain(2));
  const auto d2 = dual(c2);
  EXPECT_EQ(d2.bottom(), 1);
  EXPECT_EQ(d2.semilattice().top(), 0);
  const FiniteLattice c3(chain(3));
  const auto d3 = dual(c3);
  EXPECT_TRUE(d3.semilattice().leq(2, 0));
  EXPECT_FALSE(d3.semilattice().leq(0, 2));
  for (const auto &L : all_semilattices_up_to(6))
    if (L.is_lattice()) {
      const FiniteLattice K(L);
      EXPECT_EQ(dual(dual(K)).semilattice().table(), L.table());
    }
  EXPECT_THROW(FiniteLattice{vee()}, InputError);
}

TEST(RemoveBottom, Examples) {
  EXPECT_EQ(remove_bottom(FiniteLattice(chain(3))).table(), chain(2).table());
  EXPECT_TRUE(semilattice_isomorphic(remove_bottom(FiniteLattice(diamond())), vee()));
  EXPECT_EQ(remove_bottom(FiniteLattice(chain(2))).size(), 1u);
  EXPECT_THROW(remove_bottom(FiniteLattice(chain(1))), InputError);
}

TEST(Boxtimes, FigureExample) {
  // Two 2-chains glued at a common top.
  const auto expected = FiniteSemilattice::from_rows(
      {{0, 1, 4, 4, 4}, {1, 1, 4, 4, 4}, {4, 4, 2, 3, 4}, {4, 4, 3, 3, 4}, {4, 4, 4, 4, 4}});
  const auto box = boxtimes(vee(), chain(3));
  EXPECT_EQ(box.product.size(), 5u);
  EXPECT_TRUE(semilattice_isomorphic(box.product, expected));
  EXPECT_EQ(box.merged, 4);
}

TEST(Boxtimes, SizeFormulaAndTwoChainUnit) {
  EXPECT_EQ(boxtimes(chain(3), chain(3)).product.size(), 5u);
  const auto ls = all_semilattices_up_to(6);
  for (const auto &L : ls) {
    const auto box = boxtimes(L, chain(2));
    EXPECT_TRUE(semilattice_isomorphic(box.product, L));
    EXPECT_EQ(box.merged, box.product.size() - 1);
  }
  for (const auto &L : all_semilattices_up_to(4))
    for (const auto &K : all_semilattices_up_to(4)) {
      const auto box = boxtimes(L, K);
      EXPECT_EQ(box.product.size(), (L.size() - 1) * (K.size() - 1) + 1);
      // Order on singleton classes is componentwise; everything lies below A.
      for (Elem a = 0; a < L.size(); ++a)
        for (Elem b = 0; b < K.size(); ++b) {
          const Elem c = box.cls(a, b);
          EXPECT_TRUE(box.product.leq(c, box.merged));
          if (a == L.top() || b == K.top())
            EXPECT_EQ(c, box.merged);
        }
    }
}

TEST(Enumerate, CountsMatchPermutationOracle) {
  for (int n = 1; n <= 5; ++n)
    EXPECT_EQ(enumerate_semilattices(n).size(), oracle::naive_semilattice_count(n)) << "n = " << n;
}

TEST(Enumerate, PairwiseNonIsomorphicAndDeterministic) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto a = enumerate_semilattices(n);
    const auto b = enumerate_semilattices(n);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_EQ(a[i].table(), b[i].table());
      for (std::size_t j = i + 1; j < a.size(); ++j)
        EXPECT_FALSE(semilattice_isomorphic(a[i], a[j]));
    }
  }
}

TEST(Isomorphic, Examples) {
  const auto c3 = chain(3);
  const std::vector<Elem> perm{2, 0, 1};
  const FiniteSemilattice relabeled(relabel(c3.table(), perm));
  const auto iso = semilattice_isomorphic(c3, relabeled);
  ASSERT_TRUE(iso);
  for (Elem x = 0; x < 3; ++x)
    for (Elem y = 0; y < 3; ++y)
      EXPECT_EQ((*iso)[c3.join(x, y)], relabeled.join((*iso)[x], (*iso)[y]));
  EXPECT_FALSE(semilattice_isomorphic(c3, vee()));
  const FiniteLattice d(diamond());
  EXPECT_EQ(semilattice_isomorphic(diamond(), dual(dual(d)).semilattice()), identity_permutation(4));
}
