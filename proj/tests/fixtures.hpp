#ifndef SFORGE_TESTS_FIXTURES_HPP
#define SFORGE_TESTS_FIXTURES_HPP

#include "sforge/sforge.hpp"

namespace fixtures {

using namespace sforge;

inline JoinMorphism img(std::vector<Elem> v) { return {std::move(v)}; }

/// The right-not-left semiring {a, b, c} of Res1(3-chain).
inline MorphismSemiring res1_chain3() {
  return morphism_semiring(chain(3), {img({0, 0, 2}), img({0, 1, 2}), img({0, 2, 2})});
}

/// {k0, id, k1} on the 2-chain.
inline MorphismSemiring left_chain2() {
  return morphism_semiring(chain(2), {img({0, 0}), img({0, 1}), img({1, 1})});
}

/// The five maps f_{a,b} of the 3-chain.
inline MorphismSemiring absorbing5() {
  const auto L = chain(3);
  std::vector<JoinMorphism> gens;
  for (Elem a = 0; a < 2; ++a)
    for (Elem b = 0; b < 3; ++b)
      gens.push_back(make_f(L, a, b));
  return closure_semiring(L, gens);
}

/// All of JM1(3-chain).
inline MorphismSemiring absorbing6() {
  return morphism_semiring(chain(3), enumerate_morphisms(chain(3), MorphismClass::JM1));
}

/// R7,1, R7,2, R8,1, R8,2, R10 in that order.
inline const std::vector<MorphismSemiring> &chain4_family() {
  static const auto v = induced_semirings(chain(4), CaseTag::RightNotLeft);
  return v;
}

inline FiniteSemiring vz2() { return v_of_group(cyclic_group(2)); }

inline FiniteSemiring b2xb2() { return direct_product(boolean_semiring(), boolean_semiring()); }

/// Additively idempotent semirings of order <= 4 (all) and simple ones of
/// order 5, enumerated once.
inline const std::vector<FiniteSemiring> &corpus_all4() {
  static const auto v = [] {
    EnumerationOptions o;
    o.max_size = 4;
    o.simple_only = false;
    return enumerate_semirings(o);
  }();
  return v;
}

inline const std::vector<FiniteSemiring> &corpus_simple5() {
  static const auto v = [] {
    EnumerationOptions o;
    o.max_size = 5;
    return enumerate_semirings(o);
  }();
  return v;
}

} // namespace fixtures

#endif // SFORGE_TESTS_FIXTURES_HPP
