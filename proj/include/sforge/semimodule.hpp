#ifndef SFORGE_SEMIMODULE_HPP
#define SFORGE_SEMIMODULE_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "closure_system.hpp"
#include "morphism.hpp"
#include "semiring.hpp"

namespace sforge {

/// A commutative semigroup (M,+) with an action R x M -> M of a fixed
/// finite semiring. action(r, x) is rx. Construction checks all laws.
class RSemimodule {
public:
  RSemimodule(FiniteSemiring ring, Table add, Table action)
      : ring_(std::move(ring)), add_(std::move(add)), action_(std::move(action)) {
    const std::size_t m = add_.rows();
    const std::size_t r = ring_.size();
    if (m == 0 || add_.cols() != m || !add_.entries_below(m))
      throw InputError("module addition must be a square table with entries in range");
    if (action_.rows() != r || action_.cols() != m || !action_.entries_below(m))
      throw InputError("action table must be |R| x |M| with entries in range");
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y) {
        if (add_(x, y) != add_(y, x))
          throw InputError("module addition is not commutative");
        for (std::size_t z = 0; z < m; ++z)
          if (add_(add_(x, y), z) != add_(x, add_(y, z)))
            throw InputError("module addition is not associative");
      }
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t b = 0; b < r; ++b) {
          if (act(a, act(b, x)) != act(ring_.mul(a, b), x))
            throw InputError("action fails r(sx) = (rs)x");
          if (act(ring_.add(a, b), x) != add_(act(a, x), act(b, x)))
            throw InputError("action fails (r+s)x = rx+sx");
        }
        for (std::size_t y = 0; y < m; ++y)
          if (act(a, add_(x, y)) != add_(act(a, x), act(a, y)))
            throw InputError("action fails r(x+y) = rx+ry");
      }
  }

  const FiniteSemiring &ring() const { return ring_; }
  std::size_t size() const { return add_.rows(); }
  Elem add(std::size_t x, std::size_t y) const { return add_(x, y); }
  Elem act(std::size_t r, std::size_t x) const { return action_(r, x); }
  const Table &add_table() const { return add_; }
  const Table &action_table() const { return action_; }

  bool idempotent() const {
    for (std::size_t x = 0; x < size(); ++x)
      if (add_(x, x) != x)
        return false;
    return true;
  }

  /// (M,+) as a semilattice; requires idempotency.
  FiniteSemilattice semilattice() const {
    if (!idempotent())
      throw InputError("semimodule is not idempotent");
    return FiniteSemilattice(add_);
  }

private:
  FiniteSemiring ring_;
  Table add_;
  Table action_;
};

/// (R,+) with left multiplication.
inline RSemimodule regular_semimodule(const FiniteSemiring &R) {
  return RSemimodule(R, R.add_table(), R.mul_table());
}

// ---------------------------------------------------------------------------
// Predicates

inline bool is_faithful(const RSemimodule &M) {
  const std::size_t r = M.ring().size();
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a + 1; b < r; ++b)
      if (M.action_table().row(a) == M.action_table().row(b))
        return false;
  return true;
}

inline bool is_quasitrivial(const RSemimodule &M) {
  for (std::size_t a = 1; a < M.ring().size(); ++a)
    if (M.action_table().row(a) != M.action_table().row(0))
      return false;
  return true;
}

inline bool is_id_quasitrivial(const RSemimodule &M) {
  for (std::size_t a = 0; a < M.ring().size(); ++a)
    for (std::size_t x = 0; x < M.size(); ++x)
      if (M.act(a, x) != x)
        return false;
  return true;
}

struct SemimodulePredicates {
  bool faithful = false;
  bool quasitrivial = false;
  bool id_quasitrivial = false;
  bool idempotent = false;
};

inline SemimodulePredicates predicates(const RSemimodule &M) {
  return {is_faithful(M), is_quasitrivial(M), is_id_quasitrivial(M), M.idempotent()};
}

/// Ra = {ra | r in R}, ascending.
inline std::vector<Elem> orbit(const RSemimodule &M, Elem a) {
  std::vector<bool> in(M.size(), false);
  for (std::size_t r = 0; r < M.ring().size(); ++r)
    in[M.act(r, a)] = true;
  std::vector<Elem> out;
  for (std::size_t x = 0; x < M.size(); ++x)
    if (in[x])
      out.push_back(static_cast<Elem>(x));
  return out;
}

// ---------------------------------------------------------------------------
// Subsemimodules and congruences

inline Bits close_subsemimodule(const RSemimodule &M, const Bits &seed) {
  Bits cur = seed;
  std::vector<std::size_t> members = cur.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    auto push = [&](std::size_t v) {
      if (!cur.test(v)) {
        cur.set(v);
        members.push_back(v);
      }
    };
    const std::size_t x = members[i];
    for (std::size_t r = 0; r < M.ring().size(); ++r)
      push(M.act(r, x));
    for (std::size_t j = 0; j <= i; ++j)
      push(M.add(x, members[j]));
  }
  return cur;
}

/// Every nonempty subset closed under + and the action, in lectic order.
inline std::vector<std::vector<Elem>> subsemimodules(const RSemimodule &M) {
  std::vector<std::vector<Elem>> out;
  for_each_closed_set(
      M.size(), [&](const Bits &b) { return close_subsemimodule(M, b); },
      [&](const Bits &b) {
        if (!b.none()) {
          auto m = b.members();
          out.emplace_back(m.begin(), m.end());
        }
        return true;
      });
  return out;
}

/// Translations x+z and rx.
inline std::vector<std::vector<Elem>> semimodule_translations(const RSemimodule &M) {
  std::vector<std::vector<Elem>> maps;
  for (std::size_t z = 0; z < M.size(); ++z) {
    std::vector<Elem> f(M.size());
    for (std::size_t x = 0; x < M.size(); ++x)
      f[x] = M.add(x, z);
    maps.push_back(std::move(f));
  }
  for (std::size_t r = 0; r < M.ring().size(); ++r)
    maps.push_back(M.action_table().row(r));
  return maps;
}

/// All semimodule congruences; full first, identity last.
inline std::vector<Partition> quotient_congruences(const RSemimodule &M) {
  return all_compatible_equivalences(M.size(), semimodule_translations(M));
}

/// Quotient by a congruence. `order` lists the blocks (by partition id) in
/// the order they should be numbered; empty means partition order.
inline RSemimodule quotient(const RSemimodule &M, const Partition &c, std::vector<Elem> order = {}) {
  if (c.size() != M.size() || !is_compatible(c, semimodule_translations(M)))
    throw InputError("partition is not a semimodule congruence");
  const auto classes = c.classes();
  const std::size_t k = classes.size();
  if (order.empty())
    order = identity_permutation(k);
  const auto label = invert_permutation(order); // block id -> new index
  Table add = Table::square(k);
  Table act(M.ring().size(), k);
  for (std::size_t i = 0; i < k; ++i) {
    const Elem xi = classes[order[i]][0];
    for (std::size_t j = 0; j < k; ++j)
      add(i, j) = label[c.block(M.add(xi, classes[order[j]][0]))];
    for (std::size_t r = 0; r < M.ring().size(); ++r)
      act(r, i) = label[c.block(M.act(r, xi))];
  }
  return RSemimodule(M.ring(), std::move(add), std::move(act));
}

// ---------------------------------------------------------------------------
// Irreducibility

struct Irreducibility {
  bool sub_irreducible = false;
  bool quotient_irreducible = false;
  bool irreducible() const { return sub_irreducible && quotient_irreducible; }
};

inline bool is_sub_irreducible(const RSemimodule &M) {
  if (is_quasitrivial(M))
    return false;
  for (const auto &N : subsemimodules(M)) {
    if (N.size() == M.size())
      continue;
    for (std::size_t r = 0; r < M.ring().size(); ++r)
      for (Elem x : N)
        if (M.act(r, x) != x)
          return false;
  }
  return true;
}

inline bool is_quotient_irreducible(const RSemimodule &M) {
  if (is_quasitrivial(M))
    return false;
  const auto maps = semimodule_translations(M);
  const auto id = Partition::identity(M.size());
  for (Elem a = 0; a < M.size(); ++a)
    for (Elem b = static_cast<Elem>(a + 1); b < M.size(); ++b)
      if (!close_equivalence(id, {{a, b}}, maps).is_full())
        return false;
  return true;
}

inline Irreducibility irreducibility(const RSemimodule &M) {
  return {is_sub_irreducible(M), is_quotient_irreducible(M)};
}

// ---------------------------------------------------------------------------
// Embedding T and the smallest faithful semimodule

/// T_r : x -> rx for every r, in ring order.
struct Embedding {
  FiniteSemilattice module;
  std::vector<JoinMorphism> T;
  bool injective = false;
};

inline Embedding embedding_T(const RSemimodule &M) {
  Embedding e{M.semilattice(), {}, is_faithful(M)};
  for (std::size_t r = 0; r < M.ring().size(); ++r)
    e.T.push_back({M.action_table().row(r)});
  return e;
}

/// Precondition shared by the constructions that need a simple additively
/// idempotent semiring with more than two elements.
inline void require_simple_idempotent(const FiniteSemiring &R) {
  require_semiring(R);
  if (R.size() <= 2)
    throw HypothesisError("semiring has at most two elements");
  if (!is_additively_idempotent(R))
    throw HypothesisError("semiring is not additively idempotent");
  if (!is_simple(R))
    throw HypothesisError("semiring is not simple");
}

/// A faithful semimodule of minimum size. A faithful semimodule of minimum
/// size is cyclic (Ra = M), hence a quotient of (R,+) under left
/// multiplication, so only those quotients are searched.
///
/// Blocks are numbered by (down-set size in the quotient, least member);
/// among minimum-size faithful quotients the lex-least (action, join) pair
/// wins. The result is checked faithful, idempotent and irreducible.
inline RSemimodule smallest_faithful(const FiniteSemiring &R) {
  require_simple_idempotent(R);
  const RSemimodule reg = regular_semimodule(R);
  std::optional<RSemimodule> best;
  std::size_t best_size = R.size() + 1;
  for (const auto &c : quotient_congruences(reg)) {
    const std::size_t k = c.block_count();
    if (k > best_size)
      continue;
    bool faithful = true;
    for (std::size_t r = 0; r < R.size() && faithful; ++r)
      for (std::size_t s = r + 1; s < R.size() && faithful; ++s) {
        bool differ = false;
        for (std::size_t x = 0; x < R.size() && !differ; ++x)
          differ = !c.related(R.mul(r, x), R.mul(s, x));
        faithful = differ;
      }
    if (!faithful)
      continue;
    const RSemimodule raw = quotient(reg, c);
    const auto classes = c.classes();
    std::vector<std::pair<std::size_t, Elem>> key(k);
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t below = 0;
      for (std::size_t j = 0; j < k; ++j)
        below += raw.add(i, j) == i;
      key[i] = {below, classes[i][0]};
    }
    std::vector<Elem> order = identity_permutation(k);
    std::sort(order.begin(), order.end(), [&](Elem a, Elem b) { return key[a] < key[b]; });
    RSemimodule cand = quotient(reg, c, order);
    const bool better = !best || k < best_size ||
                        std::tie(cand.action_table(), cand.add_table()) <
                            std::tie(best->action_table(), best->add_table());
    if (better) {
      best = std::move(cand);
      best_size = k;
    }
  }
  if (!best || !is_faithful(*best) || !best->idempotent() || !irreducibility(*best).irreducible())
    throw RefutationError("smallest faithful semimodule is not faithful, idempotent and irreducible",
                          "ring of size " + std::to_string(R.size()));
  return *best;
}

// ---------------------------------------------------------------------------
// Density witnesses

enum class DensityOutcome { Found, Refuted, HypothesesUnmet };

struct DensityResult {
  DensityOutcome outcome = DensityOutcome::HypothesesUnmet;
  std::optional<Elem> element;
  std::string reason;
};

namespace detail {

inline std::optional<Elem> find_two_valued(const RSemimodule &M, const FiniteSemilattice &S, Elem a, Elem target) {
  for (std::size_t r = 0; r < M.ring().size(); ++r) {
    bool match = true;
    for (std::size_t x = 0; x < M.size() && match; ++x)
      match = M.act(r, x) == (S.leq(x, a) ? target : S.top());
    if (match)
      return static_cast<Elem>(r);
  }
  return std::nullopt;
}

inline std::string irreducible_module_gap(const RSemimodule &M) {
  const auto &R = M.ring();
  if (R.size() <= 2 || !is_additively_idempotent(R) || !is_simple(R))
    return "ring is not simple additively idempotent with more than two elements";
  if (!M.idempotent())
    return "semimodule is not idempotent";
  if (!irreducibility(M).irreducible())
    return "semimodule is not irreducible";
  return {};
}

} // namespace detail

/// r_{a,0}: the element acting as 0_M on the down-set of a and as the top
/// elsewhere. Guaranteed when the greatest element of R is not left
/// absorbing and M is idempotent irreducible.
inline DensityResult density_witness_zero(const RSemimodule &M, Elem a) {
  if (a >= M.size())
    throw InputError("element index out of range");
  const FiniteSemilattice S = M.semilattice();
  if (a == S.top())
    throw InputError("density witness requires a below the greatest element");
  if (auto gap = detail::irreducible_module_gap(M); !gap.empty())
    return {DensityOutcome::HypothesesUnmet, std::nullopt, gap};
  if (structure(M.ring()).greatest_left_absorbing)
    return {DensityOutcome::HypothesesUnmet, std::nullopt, "greatest element of R is left absorbing"};
  if (!S.bottom())
    return {DensityOutcome::Refuted, std::nullopt, "semimodule has no neutral element"};
  if (auto r = detail::find_two_valued(M, S, a, *S.bottom()))
    return {DensityOutcome::Found, r, {}};
  return {DensityOutcome::Refuted, std::nullopt, "no element acts as r_{a,0}"};
}

/// r_{a,u} for a minimal u witnessing (*). Guaranteed when R fixes the top
/// of M and M is idempotent irreducible.
inline DensityResult density_witness_u(const RSemimodule &M, Elem a, Elem u) {
  if (a >= M.size() || u >= M.size())
    throw InputError("element index out of range");
  const FiniteSemilattice S = M.semilattice();
  const Elem top = S.top();
  if (a == top)
    throw InputError("density witness requires a below the greatest element");
  if (auto gap = detail::irreducible_module_gap(M); !gap.empty())
    return {DensityOutcome::HypothesesUnmet, std::nullopt, gap};
  const auto mins = minimal_elements(S);
  if (std::find(mins.begin(), mins.end(), u) == mins.end())
    return {DensityOutcome::HypothesesUnmet, std::nullopt, "u is not minimal"};
  for (std::size_t x = 0; x < S.size(); ++x)
    if (x != top && S.join(u, x) == top)
      return {DensityOutcome::HypothesesUnmet, std::nullopt, "u does not witness property (*)"};
  for (std::size_t r = 0; r < M.ring().size(); ++r)
    if (M.act(r, top) != top)
      return {DensityOutcome::HypothesesUnmet, std::nullopt, "R does not fix the greatest element of M"};
  if (auto r = detail::find_two_valued(M, S, a, u))
    return {DensityOutcome::Found, r, {}};
  return {DensityOutcome::Refuted, std::nullopt, "no element acts as r_{a,u}"};
}

inline StarResult semimodule_star(const RSemimodule &M) {
  if (!M.idempotent())
    throw InputError("property (*) needs an idempotent semimodule");
  return has_star_property(M.semilattice());
}

// ---------------------------------------------------------------------------
// Structure suite for idempotent sub-irreducible semimodules

/// Checks the structural consequences of sub-irreducibility over a simple
/// additively idempotent R with |R| > 2. Returns one message per violation.
inline std::vector<std::string> structure_suite(const RSemimodule &M) {
  std::vector<std::string> bad;
  const auto &R = M.ring();
  const FiniteSemilattice S = M.semilattice();
  const Elem top = S.top();
  const auto bottom = S.bottom();
  const auto st = structure(R);
  auto fixed = [&](Elem x) {
    for (std::size_t r = 0; r < R.size(); ++r)
      if (M.act(r, x) != x)
        return false;
    return true;
  };

  // (a) some Ra = M; any x with Rx != M is a fixed top or a fixed bottom.
  bool cyclic = false;
  for (Elem x = 0; x < M.size(); ++x) {
    if (orbit(M, x).size() == M.size()) {
      cyclic = true;
      continue;
    }
    const bool ok = (x == top && fixed(x)) || (bottom && x == *bottom && fixed(x));
    if (!ok)
      bad.push_back("(a) Rx != M for x=" + std::to_string(x) + " which is neither a fixed top nor a fixed bottom");
  }
  if (!cyclic)
    bad.push_back("(a) no a with Ra = M");

  // (b) greatest of R right absorbing iff R fixes the top of M.
  if (st.greatest_right_absorbing != fixed(top))
    bad.push_back("(b) right absorption of the greatest element disagrees with R fixing the top of M");

  // (c) additive neutral in R forces one in M.
  if (st.additive_neutral && !bottom)
    bad.push_back("(c) R has an additive neutral but M does not");

  // (d) neither left nor right absorbing forces a zero.
  if (!st.greatest_left_absorbing && !st.greatest_right_absorbing && !st.zero)
    bad.push_back("(d) greatest element neither left nor right absorbing but R has no zero");

  // (e) proper subsemimodules lie inside {0, top}.
  for (const auto &N : subsemimodules(M)) {
    if (N.size() == M.size())
      continue;
    for (Elem x : N)
      if (x != top && !(bottom && x == *bottom))
        bad.push_back("(e) proper subsemimodule contains " + std::to_string(x));
  }
  return bad;
}

/// Monotonicity of the action in both arguments.
inline bool action_is_monotone(const RSemimodule &M) {
  const auto &R = M.ring();
  for (std::size_t r = 0; r < R.size(); ++r)
    for (std::size_t x = 0; x < M.size(); ++x)
      for (std::size_t y = 0; y < M.size(); ++y)
        if (M.add(x, y) == y && M.add(M.act(r, x), M.act(r, y)) != M.act(r, y))
          return false;
  for (std::size_t r = 0; r < R.size(); ++r)
    for (std::size_t s = 0; s < R.size(); ++s)
      if (R.add(r, s) == s)
        for (std::size_t x = 0; x < M.size(); ++x)
          if (M.add(M.act(r, x), M.act(s, x)) != M.act(s, x))
            return false;
  return true;
}

} // namespace sforge

#endif // SFORGE_SEMIMODULE_HPP
