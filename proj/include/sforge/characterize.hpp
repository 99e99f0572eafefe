#ifndef SFORGE_CHARACTERIZE_HPP
#define SFORGE_CHARACTERIZE_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "box_construction.hpp"
#include "conditions.hpp"
#include "semimodule.hpp"
#include "semiring_constructions.hpp"

namespace sforge {

/// Builds a semilattice from an order on 0..n-1 in which every pair has a
/// least upper bound.
inline FiniteSemilattice semilattice_from_order(std::size_t n, const std::function<bool(Elem, Elem)> &leq) {
  Table t = Table::square(n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      std::optional<Elem> lub;
      for (Elem z = 0; z < n; ++z) {
        if (!leq(x, z) || !leq(y, z))
          continue;
        bool least = true;
        for (Elem w = 0; w < n && least; ++w)
          least = !(leq(x, w) && leq(y, w)) || leq(z, w);
        if (least)
          lub = z;
      }
      if (!lub)
        throw InputError("order has a pair without least upper bound");
      t(x, y) = *lub;
    }
  return FiniteSemilattice(std::move(t));
}

/// Checks that maps[r] realizes ring element r: sums go to pointwise joins
/// over L, products to composites, and distinct elements to distinct maps.
/// Returns an empty string on success.
inline std::string realization_gap(const FiniteSemiring &R, const FiniteSemilattice &L,
                                   const std::vector<JoinMorphism> &maps) {
  if (maps.size() != R.size())
    return "realization has the wrong number of maps";
  for (const auto &f : maps)
    if (!is_join_morphism(L, f))
      return "realization contains a map that is not a join-morphism";
  if (std::set<JoinMorphism>(maps.begin(), maps.end()).size() != maps.size())
    return "realization is not injective";
  for (std::size_t r = 0; r < R.size(); ++r)
    for (std::size_t s = 0; s < R.size(); ++s) {
      if (maps[R.add(r, s)] != sup(L, maps[r], maps[s]))
        return "realization does not carry + to the pointwise join at (" + std::to_string(r) + "," +
               std::to_string(s) + ")";
      if (maps[R.mul(r, s)] != compose(maps[r], maps[s]))
        return "realization does not carry products to composites at (" + std::to_string(r) + "," +
               std::to_string(s) + ")";
    }
  return {};
}

// ---------------------------------------------------------------------------
// From Res1(K) to JM(K^d without its least element)

struct DualizedRealization {
  FiniteSemilattice L;
  /// maps[i] is the image of the i-th input map.
  std::vector<JoinMorphism> maps;
};

namespace detail {

inline DualizedRealization dualize_maps(const FiniteLattice &K, const std::vector<JoinMorphism> &S) {
  const FiniteLattice Kd = dual(K);
  DualizedRealization out{remove_bottom(Kd), {}};
  for (const auto &f : S)
    out.maps.push_back(psi_restrict(Kd, residual(K, f)));
  return out;
}

} // namespace detail

/// f -> restriction of its residual. Composition order flips, so the output
/// (with the join of the dual lattice and ordinary composition) is
/// isomorphic to the opposite of the input semiring.
inline DualizedRealization dualize_pipeline(const FiniteLattice &K, const std::vector<JoinMorphism> &S) {
  if (K.size() < 2)
    throw InputError("dualization needs at least two elements");
  for (const auto &f : S)
    if (!is_member(K.semilattice(), f, MorphismClass::Res1))
      throw HypothesisError("input map is not in Res1(K)");
  morphism_semiring(K.semilattice(), S);
  const auto rep = check_conditions(K.semilattice(), S, {6, 7, 8});
  if (!rep.all({6, 7, 8}))
    throw HypothesisError("input does not fulfil conditions (6)(7)(8)");
  return detail::dualize_maps(K, S);
}

// ---------------------------------------------------------------------------
// Semilattice recovery

struct Certificate {
  std::string name;
  std::vector<Elem> domain;
  /// images[i] is the image of domain[i].
  std::vector<JoinMorphism> images;
  /// The composed set the images must exhaust, sorted.
  std::vector<JoinMorphism> target;
  bool bijective = false;
  bool order_ok = false;
  /// The semilattice read back from the target set.
  std::optional<FiniteSemilattice> recovered;

  bool valid() const { return bijective && order_ok && recovered.has_value(); }
};

namespace detail {

inline std::vector<JoinMorphism> compose_all(const std::vector<JoinMorphism> &R, const JoinMorphism &g, bool left) {
  std::set<JoinMorphism> out;
  for (const auto &f : R)
    out.insert(left ? compose(g, f) : compose(f, g));
  return {out.begin(), out.end()};
}

inline void finish_certificate(Certificate &c, const FiniteSemilattice &L, bool dual_order) {
  const std::set<JoinMorphism> imgs(c.images.begin(), c.images.end());
  c.bijective = imgs.size() == c.images.size() && std::vector<JoinMorphism>(imgs.begin(), imgs.end()) == c.target;
  c.order_ok = true;
  for (std::size_t i = 0; i < c.domain.size(); ++i)
    for (std::size_t j = 0; j < c.domain.size(); ++j) {
      const bool dom = L.leq(c.domain[i], c.domain[j]);
      const bool img = dual_order ? pointwise_leq(L, c.images[j], c.images[i])
                                  : pointwise_leq(L, c.images[i], c.images[j]);
      if (dom != img)
        c.order_ok = false;
    }
}

} // namespace detail

/// The matching recovery map for each case:
///   right-not-left  Gamma:  a -> f_{a,0}, L\{1} dual-isomorphic to f_{0,0}∘R
///   left-not-right  Lambda: a -> k_a,     L isomorphic to R∘k_1
///   absorbing (*)   Phi:    c -> f_{a,c}, L isomorphic to R∘f_{a,b}
///   neither         E:      c -> e_{0,c}, L isomorphic to R∘e_{0,1}
/// For Phi, (a,b) defaults to the first minimal element and first coatom.
inline Certificate recover_semilattice(CaseTag tag, const FiniteSemilattice &L, const std::vector<JoinMorphism> &R,
                                       std::optional<std::pair<Elem, Elem>> ab = std::nullopt) {
  Certificate c;
  const std::size_t n = L.size();
  const Elem top = L.top();
  auto require = [&](const std::vector<int> &which) {
    const auto rep = check_conditions(L, R, which);
    if (!rep.all(which))
      throw HypothesisError("realization does not fulfil the conditions of its case");
  };
  switch (tag) {
  case CaseTag::RightNotLeft: {
    if (!L.is_lattice() || n < 2)
      throw HypothesisError("recovery by Gamma needs a lattice with at least two elements");
    require({6, 7, 8});
    const Elem bot = *L.bottom();
    c.name = "Gamma";
    for (Elem a = 0; a < n; ++a)
      if (a != top) {
        c.domain.push_back(a);
        c.images.push_back(make_f(L, a, bot));
      }
    c.target = detail::compose_all(R, make_f(L, bot, bot), true);
    detail::finish_certificate(c, L, true);
    if (c.bijective) {
      // target ordered dually, with a new top appended.
      const std::size_t m = c.target.size();
      c.recovered = semilattice_from_order(m + 1, [&](Elem x, Elem y) {
        if (y == m)
          return true;
        if (x == m)
          return false;
        return pointwise_leq(L, c.target[y], c.target[x]);
      });
    }
    return c;
  }
  case CaseTag::LeftNotRight:
    require({3, 4, 5});
    c.name = "Lambda";
    for (Elem a = 0; a < n; ++a) {
      c.domain.push_back(a);
      c.images.push_back(make_k(L, a));
    }
    c.target = detail::compose_all(R, make_k(L, top), false);
    break;
  case CaseTag::Absorbing:
  case CaseTag::AbsorbingStar: {
    require({1, 2});
    if (n < 2)
      throw HypothesisError("recovery by Phi needs at least two elements");
    const Elem a = ab ? ab->first : minimal_elements(L).front();
    const Elem b = ab ? ab->second : coatoms(L).front();
    if (a >= n || b >= n || a == top || b == top)
      throw InputError("Phi needs a and b below the greatest element");
    c.name = "Phi";
    for (Elem x = 0; x < n; ++x) {
      c.domain.push_back(x);
      c.images.push_back(make_f(L, a, x));
    }
    c.target = detail::compose_all(R, make_f(L, a, b), false);
    break;
  }
  case CaseTag::Neither: {
    const auto K = as_lattice(L);
    if (!K || n < 2)
      throw HypothesisError("recovery by E needs a lattice with at least two elements");
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (std::find(R.begin(), R.end(), make_e(*K, a, b)) == R.end())
          throw HypothesisError("realization misses some e_{a,b}");
    c.name = "E";
    for (Elem x = 0; x < n; ++x) {
      c.domain.push_back(x);
      c.images.push_back(make_e(*K, K->bottom(), x));
    }
    c.target = detail::compose_all(R, make_e(*K, K->bottom(), top), false);
    break;
  }
  default:
    throw InputError("no recovery map for case " + std::string(to_string(tag)));
  }
  detail::finish_certificate(c, L, false);
  if (c.bijective)
    c.recovered = semilattice_from_order(c.target.size(), [&](Elem x, Elem y) {
      return pointwise_leq(L, c.target[x], c.target[y]);
    });
  return c;
}

// ---------------------------------------------------------------------------
// Round trip

struct RoundTrip {
  CaseTag tag = CaseTag::NotApplicable;
  std::size_t module_size = 0;
  std::optional<FiniteSemilattice> L;
  /// realization[r] realizes ring element r on L.
  std::vector<JoinMorphism> realization;
  std::optional<MorphismClass> morphism_class;
  std::vector<int> required;
  ConditionReport conditions;
  std::optional<Certificate> certificate;
  std::optional<BoxMatch> box;
  bool verdict = false;
  std::vector<std::string> witnesses;
};

namespace detail {

inline std::vector<JoinMorphism> action_maps(const RSemimodule &M) { return embedding_T(M).T; }

inline void check_class(RoundTrip &rt, MorphismClass cls) {
  rt.morphism_class = cls;
  for (std::size_t r = 0; r < rt.realization.size(); ++r)
    if (!is_member(*rt.L, rt.realization[r], cls)) {
      rt.witnesses.push_back("element " + std::to_string(r) + " is not in " + std::string(to_string(cls)));
      return;
    }
}

inline void check_required(RoundTrip &rt, const std::vector<int> &which) {
  rt.required = which;
  rt.conditions = check_conditions(*rt.L, rt.realization, which);
  for (int c : which)
    if (!rt.conditions.holds(c)) {
      std::string w = "condition (" + std::to_string(c) + ") fails at";
      for (Elem v : rt.conditions.result[static_cast<std::size_t>(c)]->witness)
        w += " " + std::to_string(v);
      rt.witnesses.push_back(w);
    }
}

inline void attach_certificate(RoundTrip &rt, CaseTag tag) {
  try {
    rt.certificate = recover_semilattice(tag, *rt.L, rt.realization);
    if (!rt.certificate->valid())
      rt.witnesses.push_back(rt.certificate->name + " certificate is not a valid (dual) order isomorphism");
    else if (!semilattice_isomorphic(*rt.certificate->recovered, *rt.L))
      rt.witnesses.push_back("recovered semilattice differs from L");
  } catch (const HypothesisError &e) {
    rt.witnesses.push_back(std::string("certificate: ") + e.what());
  }
}

} // namespace detail

/// Realizes a simple additively idempotent R (|R| > 2) as the theorem of
/// its case prescribes and verifies the conditions that theorem demands.
inline RoundTrip theorem_roundtrip(const FiniteSemiring &R) {
  require_simple_idempotent(R);
  RoundTrip rt;
  const auto st = structure(R);
  rt.tag = st.tag;
  auto set_realization = [&](FiniteSemilattice L, std::vector<JoinMorphism> maps) {
    rt.L = std::move(L);
    rt.realization = std::move(maps);
    if (auto gap = realization_gap(R, *rt.L, rt.realization); !gap.empty())
      rt.witnesses.push_back(gap);
  };

  switch (st.tag) {
  case CaseTag::RightNotLeft: {
    const RSemimodule M = smallest_faithful(R);
    rt.module_size = M.size();
    set_realization(M.semilattice(), detail::action_maps(M));
    if (!rt.L->is_lattice() || rt.L->size() <= 2) {
      rt.witnesses.push_back("semimodule is not a lattice with more than two elements");
      break;
    }
    detail::check_class(rt, MorphismClass::Res1);
    detail::check_required(rt, {6, 7, 8});
    detail::attach_certificate(rt, rt.tag);
    break;
  }
  case CaseTag::LeftNotRight: {
    const FiniteSemiring Rop = opposite(R);
    const RSemimodule M = smallest_faithful(Rop);
    rt.module_size = M.size();
    const auto K = as_lattice(M.semilattice());
    if (!K) {
      rt.witnesses.push_back("semimodule of the opposite semiring is not a lattice");
      break;
    }
    const auto S = detail::action_maps(M);
    bool res1 = true;
    for (const auto &f : S)
      res1 = res1 && is_member(K->semilattice(), f, MorphismClass::Res1);
    if (!res1) {
      rt.witnesses.push_back("opposite semiring is not realized in Res1");
      break;
    }
    auto d = detail::dualize_maps(*K, S);
    set_realization(std::move(d.L), std::move(d.maps));
    detail::check_class(rt, MorphismClass::JM);
    detail::check_required(rt, {3, 4, 5});
    detail::attach_certificate(rt, rt.tag);
    break;
  }
  case CaseTag::Absorbing: {
    const RSemimodule M = smallest_faithful(R);
    rt.module_size = M.size();
    const FiniteSemilattice ML = M.semilattice();
    if (has_star_property(ML).holds) {
      rt.tag = CaseTag::AbsorbingStar;
      set_realization(ML, detail::action_maps(M));
      detail::check_class(rt, MorphismClass::JM1);
      detail::check_required(rt, {1, 2});
      detail::attach_certificate(rt, rt.tag);
      break;
    }
    rt.tag = CaseTag::AbsorbingNoStar;
    rt.box = recognize_box(R, M.size());
    if (!rt.box) {
      rt.witnesses.push_back("no box construction of matching size is isomorphic to R");
      break;
    }
    std::vector<JoinMorphism> maps;
    for (std::size_t r = 0; r < R.size(); ++r)
      maps.push_back(rt.box->semiring.maps[rt.box->iso[r]]);
    set_realization(rt.box->semiring.L, std::move(maps));
    detail::check_class(rt, MorphismClass::JM1);
    if (!semilattice_isomorphic(ML, *rt.L))
      rt.witnesses.push_back("box product is not isomorphic to the smallest faithful semimodule");
    break;
  }
  case CaseTag::Neither: {
    const RSemimodule M = smallest_faithful(R);
    rt.module_size = M.size();
    set_realization(M.semilattice(), detail::action_maps(M));
    const auto K = as_lattice(*rt.L);
    if (!K) {
      rt.witnesses.push_back("semimodule is not a lattice");
      break;
    }
    detail::check_class(rt, MorphismClass::Res);
    const std::set<JoinMorphism> have(rt.realization.begin(), rt.realization.end());
    for (Elem a = 0; a < K->size() && rt.witnesses.empty(); ++a)
      for (Elem b = 0; b < K->size(); ++b)
        if (!have.count(make_e(*K, a, b))) {
          rt.witnesses.push_back("e_{" + std::to_string(a) + "," + std::to_string(b) + "} is missing");
          break;
        }
    if (!st.zero)
      rt.witnesses.push_back("semiring has no zero");
    if (rt.witnesses.empty())
      detail::attach_certificate(rt, rt.tag);
    break;
  }
  default:
    throw HypothesisError("no case applies");
  }
  rt.verdict = rt.witnesses.empty();
  return rt;
}

/// Case tag with the absorbing case split by (*) of the smallest faithful
/// semimodule. Requires a simple additively idempotent R with |R| > 2.
inline CaseTag classify_case(const FiniteSemiring &R) {
  require_simple_idempotent(R);
  const CaseTag t = structure(R).tag;
  if (t != CaseTag::Absorbing)
    return t;
  return has_star_property(smallest_faithful(R).semilattice()).holds ? CaseTag::AbsorbingStar
                                                                     : CaseTag::AbsorbingNoStar;
}

// ---------------------------------------------------------------------------
// Semirings induced by a semilattice

/// Every subsemiring of the ambient class of the case that meets the
/// theorem's conditions, one per isomorphism type, ordered by size and then
/// by the sorted image list.
inline std::vector<MorphismSemiring> induced_semirings(const FiniteSemilattice &L, CaseTag tag) {
  const std::size_t n = L.size();
  const Elem top = L.top();
  MorphismClass cls;
  std::vector<JoinMorphism> required;
  std::vector<int> checks;
  switch (tag) {
  case CaseTag::RightNotLeft:
    if (!L.is_lattice() || n <= 2)
      throw HypothesisError("right-not-left needs a lattice with more than two elements");
    cls = MorphismClass::Res1;
    for (Elem a = 0; a < n; ++a)
      if (a != top)
        required.push_back(make_f(L, a, *L.bottom()));
    checks = {7, 8};
    break;
  case CaseTag::LeftNotRight:
    cls = MorphismClass::JM;
    for (Elem a = 0; a < n; ++a)
      required.push_back(make_k(L, a));
    checks = {4, 5};
    break;
  case CaseTag::Absorbing:
  case CaseTag::AbsorbingStar:
    if (!has_star_property(L).holds)
      throw HypothesisError("absorbing case needs property (*)");
    cls = MorphismClass::JM1;
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n && a != top; ++b)
        required.push_back(make_f(L, a, b));
    checks = {2};
    break;
  case CaseTag::Neither: {
    const auto K = as_lattice(L);
    if (!K)
      throw HypothesisError("the zero case needs a lattice");
    cls = MorphismClass::Res;
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        required.push_back(make_e(*K, a, b));
    break;
  }
  default:
    throw InputError("no induced semirings for case " + std::string(to_string(tag)));
  }
  std::vector<std::vector<JoinMorphism>> found;
  for_each_subsemiring(L, enumerate_morphisms(L, cls), required, [&](const std::vector<JoinMorphism> &sub) {
    if (checks.empty() || check_conditions(L, sub, checks).all(checks))
      found.push_back(sub);
    return true;
  });
  std::sort(found.begin(), found.end(), [](const auto &a, const auto &b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<MorphismSemiring> out;
  for (auto &maps : found) {
    MorphismSemiring ms = morphism_semiring(L, std::move(maps));
    bool dup = false;
    for (const auto &o : out)
      if (o.ring.size() == ms.ring.size() && semiring_isomorphic(o.ring, ms.ring)) {
        dup = true;
        break;
      }
    if (!dup)
      out.push_back(std::move(ms));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Neutral elements

struct NeutralCriteria {
  std::optional<JoinMorphism> additive_neutral;
  bool additive_predicted = false;
  /// The neutral, when present, is the predicted map and has the predicted
  /// absorbing behavior.
  bool neutral_form_ok = true;
  bool identity_in_R = false;
  bool multiplicative_neutral = false;
  /// Lattice / join-irreducibility consequences of id in R.
  bool identity_consequences_ok = true;
  bool footnote_ok = true;

  bool consistent() const {
    return additive_neutral.has_value() == additive_predicted && neutral_form_ok &&
           identity_in_R == multiplicative_neutral && identity_consequences_ok && footnote_ok;
  }
};

/// Evaluates both sides of each neutral-element criterion on a realization
/// (R as maps over L) of the given case.
inline NeutralCriteria neutral_criteria(CaseTag tag, const FiniteSemilattice &L, const std::vector<JoinMorphism> &R) {
  NeutralCriteria nc;
  for (const auto &f : R) {
    bool least = true;
    for (const auto &g : R)
      least = least && pointwise_leq(L, f, g);
    if (least) {
      nc.additive_neutral = f;
      break;
    }
  }
  for (const auto &e : R) {
    bool unit = true;
    for (const auto &g : R)
      unit = unit && compose(e, g) == g && compose(g, e) == g;
    if (unit) {
      nc.multiplicative_neutral = true;
      break;
    }
  }
  nc.identity_in_R = std::find(R.begin(), R.end(), identity_morphism(L.size())) != R.end();
  const bool top_ji = is_join_irreducible(L, L.top()) && L.size() >= 2;
  const bool lattice = L.is_lattice();

  // left absorbing: n∘g = n for all g; right absorbing: g∘n = n for all g.
  auto left_abs = [&](const JoinMorphism &z) {
    return std::all_of(R.begin(), R.end(), [&](const JoinMorphism &g) { return compose(z, g) == z; });
  };
  auto right_abs = [&](const JoinMorphism &z) {
    return std::all_of(R.begin(), R.end(), [&](const JoinMorphism &g) { return compose(g, z) == z; });
  };
  auto f_star_0 = [&]() -> std::optional<JoinMorphism> {
    const auto below = unique_lower_neighbor_of_top(L);
    if (!below || !lattice)
      return std::nullopt;
    return make_f(L, *below, *L.bottom());
  };

  switch (tag) {
  case CaseTag::RightNotLeft:
    nc.additive_predicted = top_ji;
    if (nc.additive_neutral)
      nc.neutral_form_ok = *nc.additive_neutral == f_star_0() && right_abs(*nc.additive_neutral) &&
                           !left_abs(*nc.additive_neutral);
    nc.identity_consequences_ok = !nc.identity_in_R || top_ji;
    break;
  case CaseTag::LeftNotRight:
    nc.additive_predicted = lattice;
    if (nc.additive_neutral)
      nc.neutral_form_ok = lattice && *nc.additive_neutral == make_k(L, *L.bottom()) &&
                           left_abs(*nc.additive_neutral) && !right_abs(*nc.additive_neutral);
    nc.identity_consequences_ok = !nc.identity_in_R || lattice;
    break;
  case CaseTag::AbsorbingNoStar:
    // V(G) has id but no additive neutral; the criteria need the f_{a,b}.
    throw InputError("neutral-element criteria cover the absorbing case with (*) only");
  case CaseTag::Absorbing:
  case CaseTag::AbsorbingStar:
    nc.additive_predicted = top_ji && lattice;
    if (nc.additive_neutral)
      nc.neutral_form_ok = *nc.additive_neutral == f_star_0() && !right_abs(*nc.additive_neutral) &&
                           !left_abs(*nc.additive_neutral);
    nc.identity_consequences_ok = !nc.identity_in_R || (top_ji && lattice);
    break;
  case CaseTag::Neither:
    nc.additive_predicted = true;
    if (nc.additive_neutral)
      nc.neutral_form_ok = lattice && *nc.additive_neutral == make_k(L, *L.bottom()) &&
                           left_abs(*nc.additive_neutral) && right_abs(*nc.additive_neutral);
    break;
  default:
    throw InputError("no neutral-element criteria for case " + std::string(to_string(tag)));
  }
  nc.footnote_ok = !nc.multiplicative_neutral || nc.additive_neutral.has_value();
  return nc;
}

// ---------------------------------------------------------------------------
// Classification of simple semirings with an additive neutral

enum class Bucket {
  AtMostTwo = 1,
  MatrixRing = 2,
  ZeroMultiplicationRing = 3,
  WithZero = 4,
  RightNotLeft = 5,
  LeftNotRight = 6,
  Absorbing = 7,
  NotSimple,
  OutOfScope,
};

inline std::string to_string(Bucket b) {
  switch (b) {
  case Bucket::NotSimple: return "not simple";
  case Bucket::OutOfScope: return "out-of-scope-bucket";
  default: return std::to_string(static_cast<int>(b));
  }
}

struct Classification {
  Bucket bucket = Bucket::NotSimple;
  /// Predictions of the bucket checked on the instance.
  bool consistent = true;
  std::string detail;
};

/// Rings (buckets 2 and 3) are labels only: a simple non-idempotent R with
/// more than two elements is reported as out of scope.
inline Classification classification_with_additive_neutral(const FiniteSemiring &R) {
  require_semiring(R);
  if (!additive_neutral(R))
    throw InputError("semiring has no additively neutral element");
  Classification c;
  if (!is_simple(R)) {
    c.bucket = Bucket::NotSimple;
    return c;
  }
  if (R.size() <= 2) {
    c.bucket = Bucket::AtMostTwo;
    return c;
  }
  if (!is_additively_idempotent(R)) {
    c.bucket = Bucket::OutOfScope;
    c.detail = "ring bucket, not verified";
    return c;
  }
  const RoundTrip rt = theorem_roundtrip(R);
  c.consistent = rt.verdict;
  switch (rt.tag) {
  case CaseTag::Neither: c.bucket = Bucket::WithZero; break;
  case CaseTag::RightNotLeft:
    c.bucket = Bucket::RightNotLeft;
    c.consistent = c.consistent && is_join_irreducible(*rt.L, rt.L->top());
    break;
  case CaseTag::LeftNotRight:
    c.bucket = Bucket::LeftNotRight;
    c.consistent = c.consistent && rt.L->is_lattice();
    break;
  case CaseTag::AbsorbingStar:
    c.bucket = Bucket::Absorbing;
    c.consistent = c.consistent && rt.L->is_lattice() && is_join_irreducible(*rt.L, rt.L->top());
    break;
  default:
    // An additive neutral forces a neutral in M, so M has (*).
    c.bucket = Bucket::Absorbing;
    c.consistent = false;
    c.detail = "absorbing without (*) despite an additive neutral";
    break;
  }
  if (!c.consistent && c.detail.empty())
    c.detail = rt.witnesses.empty() ? "bucket prediction fails" : rt.witnesses.front();
  return c;
}

} // namespace sforge

#endif // SFORGE_CHARACTERIZE_HPP
