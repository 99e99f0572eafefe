#ifndef SFORGE_CONDITIONS_HPP
#define SFORGE_CONDITIONS_HPP

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "morphism.hpp"

namespace sforge {

/// Outcome of one numbered condition. On failure `witness` holds the
/// offending quantifier values: (a,b) for the membership and existence
/// conditions, (i) for the "every f in S" conditions where i indexes S.
struct ConditionResult {
  bool holds = true;
  std::vector<Elem> witness;
};

struct ConditionReport {
  /// Index 1..8; unset when not evaluated.
  std::array<std::optional<ConditionResult>, 9> result;

  bool evaluated(int c) const { return result.at(static_cast<std::size_t>(c)).has_value(); }
  bool holds(int c) const {
    const auto &r = result.at(static_cast<std::size_t>(c));
    return r && r->holds;
  }
  bool all(const std::vector<int> &cs) const {
    for (int c : cs)
      if (!holds(c))
        return false;
    return true;
  }
};

namespace detail {

inline bool contains(const std::set<JoinMorphism> &s, const JoinMorphism &f) { return s.count(f) != 0; }

} // namespace detail

/// Evaluates the requested conditions on the morphism set S over L.
/// (6)-(8) need L to be a lattice. Condition (5) reads "f(x) > b" strictly.
inline ConditionReport check_conditions(const FiniteSemilattice &L, const std::vector<JoinMorphism> &S,
                                        const std::vector<int> &which) {
  for (const auto &f : S)
    if (!is_join_morphism(L, f))
      throw InputError("condition check: map is not a join-morphism of L");
  ConditionReport rep;
  const std::size_t n = L.size();
  const Elem top = L.top();
  const std::set<JoinMorphism> members(S.begin(), S.end());
  for (int c : which) {
    if (c < 1 || c > 8)
      throw InputError("conditions are numbered 1 to 8");
    if (c >= 6 && !L.is_lattice())
      throw InputError("conditions (6)-(8) need a lattice");
    ConditionResult res;
    auto fail = [&](std::vector<Elem> w) {
      if (res.holds) {
        res.holds = false;
        res.witness = std::move(w);
      }
    };
    switch (c) {
    case 1:
      for (Elem a = 0; a < n && res.holds; ++a)
        for (Elem b = 0; b < n && res.holds && a != top; ++b)
          if (!detail::contains(members, make_f(L, a, b)))
            fail({a, b});
      break;
    case 2:
      for (std::size_t i = 0; i < S.size() && res.holds; ++i) {
        bool found = false;
        for (Elem a = 0; a < n && !found; ++a)
          for (Elem b = 0; b < n && !found && a != top; ++b)
            found = pointwise_leq(L, make_f(L, a, b), S[i]);
        if (!found)
          fail({static_cast<Elem>(i)});
      }
      break;
    case 3:
      for (Elem a = 0; a < n && res.holds; ++a)
        if (!detail::contains(members, make_k(L, a)))
          fail({a});
      break;
    case 4:
      for (std::size_t i = 0; i < S.size() && res.holds; ++i) {
        bool found = false;
        for (Elem a = 0; a < n && !found; ++a)
          found = pointwise_leq(L, make_k(L, a), S[i]);
        if (!found)
          fail({static_cast<Elem>(i)});
      }
      break;
    case 5:
      for (Elem a = 0; a < n && res.holds; ++a)
        for (Elem b = 0; b < n && res.holds; ++b) {
          if (b == top)
            continue;
          bool found = false;
          for (const auto &f : S) {
            bool ok = true;
            for (std::size_t x = 0; x < n && ok; ++x)
              ok = L.leq(x, a) ? f(x) == b : L.less(b, f(x));
            if (ok) {
              found = true;
              break;
            }
          }
          if (!found)
            fail({a, b});
        }
      break;
    case 6:
      for (Elem a = 0; a < n && res.holds; ++a)
        if (a != top && !detail::contains(members, make_f(L, a, *L.bottom())))
          fail({a});
      break;
    case 7:
      for (std::size_t i = 0; i < S.size() && res.holds; ++i) {
        bool found = false;
        for (Elem a = 0; a < n && !found; ++a)
          found = a != top && pointwise_leq(L, make_f(L, a, *L.bottom()), S[i]);
        if (!found)
          fail({static_cast<Elem>(i)});
      }
      break;
    case 8:
      for (Elem a = 0; a < n && res.holds; ++a) {
        if (a == top || a == *L.bottom())
          continue;
        for (Elem b = 0; b < n && res.holds; ++b) {
          bool found = false;
          for (const auto &f : S)
            if (f(a) == b) {
              found = true;
              break;
            }
          if (!found)
            fail({a, b});
        }
      }
      break;
    }
    rep.result[static_cast<std::size_t>(c)] = std::move(res);
  }
  return rep;
}

} // namespace sforge

#endif // SFORGE_CONDITIONS_HPP
