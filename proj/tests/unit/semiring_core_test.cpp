#include <gtest/gtest.h>

#include "../fixtures.hpp"
#include "../oracles.hpp"

using namespace sforge;
using namespace fixtures;

namespace {

oracle::Tab flat(const Table &t) {
  oracle::Tab out;
  for (std::size_t r = 0; r < t.rows(); ++r)
    for (std::size_t c = 0; c < t.cols(); ++c)
      out.push_back(t(r, c));
  return out;
}

/// Semigroup congruences of the multiplication alone.
std::size_t mul_congruences(const FiniteSemiring &R) {
  const int n = static_cast<int>(R.size());
  const auto mul = flat(R.mul_table());
  std::size_t count = 0;
  oracle::for_each_partition(n, [&](const std::vector<int> &p) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (p[x] == p[y])
          for (int t = 0; t < n; ++t)
            if (p[mul[x * n + t]] != p[mul[y * n + t]] || p[mul[t * n + x]] != p[mul[t * n + y]])
              return;
    ++count;
  });
  return count;
}

} // namespace

TEST(Axioms, Examples) {
  EXPECT_TRUE(verify_axioms(res1_chain3().ring).ok());
  EXPECT_TRUE(verify_axioms(FiniteSemiring()).ok());
  FiniteSemiring bad(Table::from_rows({{0, 0, 2}, {1, 1, 2}, {2, 2, 2}}), res1_chain3().ring.mul_table());
  const auto rep = verify_axioms(bad);
  ASSERT_FALSE(rep.ok());
  bool found = false;
  for (const auto &v : rep.violations)
    if (v.axiom.find("commutat") != std::string::npos) {
      found = true;
      EXPECT_NE(bad.add(v.x, v.y), bad.add(v.y, v.x));
    }
  EXPECT_TRUE(found);
  EXPECT_THROW(FiniteSemiring(Table::square(2), Table::square(3)), InputError);
}

TEST(Structure, Examples) {
  const auto s1 = structure(res1_chain3().ring);
  EXPECT_EQ(s1.greatest, Elem{2});
  EXPECT_TRUE(s1.greatest_right_absorbing);
  EXPECT_FALSE(s1.greatest_left_absorbing);
  EXPECT_EQ(s1.tag, CaseTag::RightNotLeft);

  const auto s2 = structure(left_chain2().ring);
  EXPECT_EQ(s2.greatest, Elem{2});
  EXPECT_TRUE(s2.greatest_left_absorbing);
  EXPECT_FALSE(s2.greatest_right_absorbing);
  EXPECT_EQ(s2.tag, CaseTag::LeftNotRight);

  const auto s3 = structure(vz2());
  EXPECT_EQ(s3.greatest, Elem{2});
  EXPECT_TRUE(s3.greatest_left_absorbing && s3.greatest_right_absorbing);
  EXPECT_EQ(s3.tag, CaseTag::Absorbing);

  EXPECT_EQ(structure(boolean_semiring()).tag, CaseTag::NotApplicable);
}

TEST(Congruences, Principal) {
  const auto R = res1_chain3().ring;
  EXPECT_TRUE(principal_congruence(R, 1, 1).is_identity());
  EXPECT_TRUE(principal_congruence(boolean_semiring(), 0, 1).is_full());
  const auto &r71 = chain4_family()[0].ring;
  for (Elem a = 0; a < r71.size(); ++a)
    for (Elem b = a + 1; b < r71.size(); ++b)
      EXPECT_TRUE(principal_congruence(r71, a, b).is_full());
}

TEST(Congruences, All) {
  EXPECT_EQ(all_congruences(boolean_semiring()).size(), 2u);
  const auto p = b2xb2();
  const auto cs = all_congruences(p);
  EXPECT_GE(cs.size(), 3u);
  // Kernel of the first projection: (x, y) ~ (x, y').
  const Partition kernel(std::vector<Elem>{0, 0, 1, 1});
  EXPECT_NE(std::find(cs.begin(), cs.end(), kernel), cs.end());
  EXPECT_EQ(all_congruences(absorbing5().ring).size(), 2u);
}

TEST(Simple, Examples) {
  EXPECT_TRUE(is_simple(chain4_family().back().ring));
  EXPECT_EQ(chain4_family().back().ring.size(), 10u);
  EXPECT_FALSE(is_simple(b2xb2()));
  EXPECT_TRUE(is_simple(FiniteSemiring()));
}

TEST(Simple, AgreesWithCongruenceLatticeAndPartitionOracle) {
  for (const auto &R : corpus_all4()) {
    const bool s = is_simple(R);
    if (R.size() >= 2)
      EXPECT_EQ(s, all_congruences(R).size() == 2);
    const auto add = flat(R.add_table()), mul = flat(R.mul_table());
    const int n = static_cast<int>(R.size());
    EXPECT_EQ(s, oracle::is_simple(add, mul, n));
    EXPECT_EQ(all_congruences(R).size(), oracle::congruence_count(add, mul, n));
  }
  for (const auto &R : corpus_simple5())
    EXPECT_EQ(all_congruences(R).size(), R.size() >= 2 ? 2u : 1u);
}

TEST(Quotient, Examples) {
  const auto R = res1_chain3().ring;
  EXPECT_TRUE(semiring_isomorphic(quotient(R, Partition::identity(3)), R));
  EXPECT_EQ(quotient(R, Partition::full(3)).size(), 1u);
  const auto q = quotient(b2xb2(), Partition(std::vector<Elem>{0, 0, 1, 1}));
  EXPECT_TRUE(semiring_isomorphic(q, boolean_semiring()));
  EXPECT_THROW(quotient(R, Partition(std::vector<Elem>{0, 0, 1})), InputError);
}

TEST(Quotient, EveryQuotientIsASemiring) {
  for (const auto &R : corpus_all4())
    for (const auto &c : all_congruences(R))
      EXPECT_TRUE(verify_axioms(quotient(R, c)).ok());
}

TEST(Isomorphism, Examples) {
  const auto &fam = chain4_family();
  ASSERT_EQ(fam.size(), 5u);
  const auto &r71 = fam[0].ring;
  const std::vector<Elem> perm{6, 3, 0, 1, 5, 2, 4};
  const auto moved = relabel(r71, perm);
  const auto iso = semiring_isomorphic(r71, moved);
  ASSERT_TRUE(iso);
  for (Elem x = 0; x < 7; ++x)
    for (Elem y = 0; y < 7; ++y) {
      EXPECT_EQ((*iso)[r71.add(x, y)], moved.add((*iso)[x], (*iso)[y]));
      EXPECT_EQ((*iso)[r71.mul(x, y)], moved.mul((*iso)[x], (*iso)[y]));
    }
  EXPECT_FALSE(semiring_isomorphic(fam[0].ring, fam[1].ring));
  EXPECT_FALSE(semiring_isomorphic(fam[2].ring, fam[3].ring));
}

TEST(Monico, Examples) {
  SandwichSpec one;
  const auto R1 = monico_sandwich(one);
  EXPECT_EQ(R1.size(), 2u);
  EXPECT_TRUE(verify_axioms(R1).ok());

  SandwichSpec two{2, 2, {{1, 0}, {0, 1}}};
  const auto R2 = monico_sandwich(two);
  EXPECT_EQ(R2.size(), 5u);
  EXPECT_TRUE(verify_axioms(R2).ok());
  EXPECT_EQ(mul_congruences(R2), 2u);
  EXPECT_TRUE(is_simple(R2));

  SandwichSpec dup{2, 2, {{1, 1}, {1, 1}}};
  EXPECT_THROW(monico_sandwich(dup), InputError);
  SandwichSpec zero{1, 2, {{1}, {0}}};
  EXPECT_THROW(monico_sandwich(zero), InputError);
}

TEST(VGroup, Examples) {
  const auto R1 = v_of_group(cyclic_group(1));
  EXPECT_EQ(R1.size(), 2u);
  const auto R = vz2();
  EXPECT_EQ(R.size(), 3u);
  EXPECT_TRUE(verify_axioms(R).ok());
  EXPECT_TRUE(is_simple(R));
  EXPECT_FALSE(has_star_property(additive_semilattice(R)).holds);
  EXPECT_THROW(v_of_group(Table::from_rows({{0, 0}, {0, 0}})), InputError);
}

TEST(Closure, Examples) {
  const auto a5 = absorbing5();
  EXPECT_EQ(a5.maps.size(), 5u);
  EXPECT_EQ(a5.maps, (std::vector<JoinMorphism>{img({0, 0, 2}), img({0, 2, 2}), img({1, 1, 2}), img({1, 2, 2}),
                                                img({2, 2, 2})}));
  EXPECT_EQ(closure_semiring(chain(3), enumerate_morphisms(chain(3), MorphismClass::JM1)).maps.size(), 6u);
  EXPECT_EQ(closure_semiring(chain(3), {identity_morphism(3)}).maps.size(), 1u);
  EXPECT_THROW(closure_semiring(chain(4), enumerate_morphisms(chain(4), MorphismClass::JM), 10), SizeCapError);
  EXPECT_THROW(closure_semiring(chain(3), {img({2, 1, 0})}), InputError);
}

TEST(Closure, OutputsSatisfyTheAxioms) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto &L : enumerate_semilattices(n)) {
      const auto jm = enumerate_morphisms(L, MorphismClass::JM);
      for (std::size_t i = 0; i < jm.size(); ++i)
        for (std::size_t j = i; j < jm.size(); j += 3)
          EXPECT_TRUE(verify_axioms(closure_semiring(L, {jm[i], jm[j]}).ring).ok());
    }
}

TEST(SimpleCorpus, ProductSetAndDistinctRows) {
  for (const auto &R : corpus_simple5()) {
    if (R.size() <= 2)
      continue;
    EXPECT_GT(product_set_size(R), 1u);
    for (Elem x = 0; x < R.size(); ++x)
      for (Elem y = x + 1; y < R.size(); ++y) {
        EXPECT_NE(R.mul_table().row(x), R.mul_table().row(y));
        bool same_col = true;
        for (Elem t = 0; t < R.size(); ++t)
          same_col = same_col && R.mul(t, x) == R.mul(t, y);
        EXPECT_FALSE(same_col);
      }
  }
}
