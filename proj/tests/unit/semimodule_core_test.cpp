#include <gtest/gtest.h>

#include "../fixtures.hpp"

using namespace sforge;
using namespace fixtures;

namespace {

RSemimodule trivial_module(const FiniteSemiring &R) {
  return RSemimodule(R, Table::square(1, 0), Table(R.size(), 1, 0));
}

bool contains_set(const std::vector<std::vector<Elem>> &sets, std::vector<Elem> s) {
  std::sort(s.begin(), s.end());
  return std::find(sets.begin(), sets.end(), s) != sets.end();
}

} // namespace

TEST(Semimodule, AxiomsAreEnforced) {
  const auto R = res1_chain3().ring;
  // r(sx) = (rs)x fails when every element acts by swapping two points.
  EXPECT_THROW(RSemimodule(R, chain(2).table(), Table::from_rows({{1, 0}, {1, 0}, {1, 0}})), InputError);
  EXPECT_THROW(RSemimodule(R, chain(2).table(), Table(2, 2, 0)), InputError);
}

TEST(Embedding, Examples) {
  const auto ms = absorbing5();
  const auto e = embedding_T(natural_semimodule(ms));
  EXPECT_TRUE(e.injective);
  EXPECT_EQ(e.T, ms.maps);

  const auto R = res1_chain3().ring;
  const RSemimodule q(R, chain(2).table(), Table(3, 2, 1));
  const auto eq = embedding_T(q);
  EXPECT_FALSE(eq.injective);
  for (const auto &t : eq.T)
    EXPECT_EQ(t, eq.T.front());

  for (const auto &S : corpus_simple5())
    if (S.size() > 2)
      EXPECT_TRUE(is_faithful(regular_semimodule(S)));
}

TEST(Predicates, Examples) {
  const auto R = res1_chain3().ring;
  const auto p1 = predicates(trivial_module(R));
  EXPECT_TRUE(p1.id_quasitrivial);
  EXPECT_TRUE(p1.quasitrivial);
  EXPECT_TRUE(predicates(regular_semimodule(vz2())).faithful);
  // The 2-chain with every element acting as the constant top: T_a = T_b.
  const RSemimodule same(R, chain(2).table(), Table(3, 2, 1));
  EXPECT_EQ(same.action_table().row(0), same.action_table().row(1));
  EXPECT_FALSE(predicates(same).faithful);
}

TEST(Subsemimodules, Examples) {
  const auto ms = absorbing6();
  const auto M = natural_semimodule(ms);
  const auto subs = subsemimodules(M);
  for (Elem a = 0; a < M.size(); ++a)
    EXPECT_TRUE(contains_set(subs, orbit(M, a)));
  EXPECT_TRUE(contains_set(subs, {M.semilattice().top()}));
  const auto cs = quotient_congruences(M);
  EXPECT_NE(std::find(cs.begin(), cs.end(), Partition::full(M.size())), cs.end());
  EXPECT_NE(std::find(cs.begin(), cs.end(), Partition::identity(M.size())), cs.end());
}

TEST(Irreducibility, Examples) {
  EXPECT_TRUE(irreducibility(natural_semimodule(absorbing5())).irreducible());
  EXPECT_TRUE(irreducibility(natural_semimodule(absorbing6())).irreducible());
  EXPECT_TRUE(irreducibility(regular_semimodule(vz2())).irreducible());
  const auto R = res1_chain3().ring;
  const RSemimodule q(R, chain(2).table(), Table(3, 2, 1));
  const auto irr = irreducibility(q);
  EXPECT_FALSE(irr.sub_irreducible);
  EXPECT_FALSE(irr.quotient_irreducible);
}

TEST(SmallestFaithful, Examples) {
  EXPECT_EQ(smallest_faithful(absorbing5().ring).size(), 3u);
  EXPECT_EQ(smallest_faithful(vz2()).size(), 3u);
  const auto M = smallest_faithful(res1_chain3().ring);
  EXPECT_EQ(M.size(), 3u);
  EXPECT_TRUE(semilattice_isomorphic(M.semilattice(), chain(3)));
  EXPECT_THROW(smallest_faithful(boolean_semiring()), HypothesisError);
  EXPECT_THROW(smallest_faithful(b2xb2()), HypothesisError);
}

TEST(SmallestFaithful, CorpusResultsAreFaithfulIdempotentIrreducible) {
  for (const auto &R : corpus_simple5()) {
    if (R.size() <= 2)
      continue;
    const auto M = smallest_faithful(R);
    EXPECT_TRUE(is_faithful(M));
    EXPECT_TRUE(M.idempotent());
    EXPECT_TRUE(irreducibility(M).irreducible());
    EXPECT_LE(M.size(), R.size());
  }
}

TEST(Density, Examples) {
  const auto rnl = res1_chain3();
  const auto d1 = density_witness_zero(natural_semimodule(rnl), 1);
  ASSERT_EQ(d1.outcome, DensityOutcome::Found);
  EXPECT_EQ(rnl.maps[*d1.element], img({0, 0, 2}));

  const auto a6 = absorbing6();
  const auto d2 = density_witness_u(natural_semimodule(a6), 1, 0);
  ASSERT_EQ(d2.outcome, DensityOutcome::Found);
  EXPECT_EQ(a6.maps[*d2.element], img({0, 0, 2}));

  EXPECT_THROW(density_witness_zero(natural_semimodule(rnl), 2), InputError);
  // Left absorbing greatest element: hypotheses unmet, not a refutation.
  const auto d3 = density_witness_zero(natural_semimodule(a6), 1);
  EXPECT_EQ(d3.outcome, DensityOutcome::HypothesesUnmet);
}

TEST(Density, WitnessesExistUnderHypotheses) {
  for (const auto &R : corpus_simple5()) {
    if (R.size() <= 2)
      continue;
    const auto M = smallest_faithful(R);
    const auto S = M.semilattice();
    for (Elem a = 0; a < M.size(); ++a) {
      if (a == S.top())
        continue;
      EXPECT_NE(density_witness_zero(M, a).outcome, DensityOutcome::Refuted);
      for (Elem u : minimal_elements(S))
        EXPECT_NE(density_witness_u(M, a, u).outcome, DensityOutcome::Refuted);
    }
  }
}

TEST(Star, Examples) {
  EXPECT_TRUE(semimodule_star(natural_semimodule(res1_chain3())).holds);
  EXPECT_FALSE(semimodule_star(regular_semimodule(vz2())).holds);
  EXPECT_TRUE(semimodule_star(trivial_module(vz2())).holds);
}

TEST(StructureSuite, SubIrreducibleSemimodulesOfSmallCorpus) {
  std::size_t checked = 0;
  for (const auto &R : corpus_simple5()) {
    if (R.size() <= 2 || R.size() > 4)
      continue;
    for (std::size_t m = 1; m <= R.size(); ++m)
      for (const auto &L : enumerate_semilattices(m)) {
        const auto E = endomorphism_table(L);
        for_each_idempotent_semimodule(R, L, E, [&](const Table &action) {
          const RSemimodule M(R, L.table(), action);
          EXPECT_TRUE(action_is_monotone(M));
          if (!is_sub_irreducible(M))
            return;
          ++checked;
          const auto bad = structure_suite(M);
          EXPECT_TRUE(bad.empty()) << bad.front();
        });
      }
  }
  EXPECT_GT(checked, 0u);
}
