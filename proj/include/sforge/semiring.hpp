#ifndef SFORGE_SEMIRING_HPP
#define SFORGE_SEMIRING_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "partition.hpp"
#include "semilattice.hpp"

namespace sforge {

/// Addition and multiplication tables over 0..n-1. mul(r, s) is r·s.
///
/// Construction checks only shape and range; verify_axioms reports the
/// algebraic laws.
class FiniteSemiring {
public:
  FiniteSemiring() : FiniteSemiring(Table::square(1, 0), Table::square(1, 0)) {}

  FiniteSemiring(Table add, Table mul) : add_(std::move(add)), mul_(std::move(mul)) {
    const std::size_t n = add_.rows();
    if (n == 0 || add_.cols() != n || mul_.rows() != n || mul_.cols() != n)
      throw InputError("semiring tables must be square, nonempty and of equal size");
    if (!add_.entries_below(n) || !mul_.entries_below(n))
      throw InputError("semiring table entry out of range");
  }

  std::size_t size() const { return add_.rows(); }
  Elem add(std::size_t x, std::size_t y) const { return add_(x, y); }
  Elem mul(std::size_t x, std::size_t y) const { return mul_(x, y); }
  const Table &add_table() const { return add_; }
  const Table &mul_table() const { return mul_; }

  auto operator<=>(const FiniteSemiring &) const = default;
  bool operator==(const FiniteSemiring &) const = default;

private:
  Table add_;
  Table mul_;
};

// ---------------------------------------------------------------------------
// Axioms

struct AxiomViolation {
  std::string axiom;
  Elem x = 0, y = 0, z = 0;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks every semiring law exhaustively; records the first witness triple
/// for each violated law.
inline AxiomReport verify_axioms(const FiniteSemiring &R) {
  AxiomReport report;
  const std::size_t n = R.size();
  std::map<std::string, AxiomViolation> first;
  auto flag = [&](const char *name, std::size_t x, std::size_t y, std::size_t z) {
    first.try_emplace(name, AxiomViolation{name, static_cast<Elem>(x), static_cast<Elem>(y), static_cast<Elem>(z)});
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (R.add(x, y) != R.add(y, x))
        flag("additive commutativity", x, y, 0);
      for (std::size_t z = 0; z < n; ++z) {
        if (R.add(R.add(x, y), z) != R.add(x, R.add(y, z)))
          flag("additive associativity", x, y, z);
        if (R.mul(R.mul(x, y), z) != R.mul(x, R.mul(y, z)))
          flag("multiplicative associativity", x, y, z);
        if (R.mul(x, R.add(y, z)) != R.add(R.mul(x, y), R.mul(x, z)))
          flag("left distributivity", x, y, z);
        if (R.mul(R.add(y, z), x) != R.add(R.mul(y, x), R.mul(z, x)))
          flag("right distributivity", x, y, z);
      }
    }
  for (auto &[name, v] : first)
    report.violations.push_back(v);
  return report;
}

inline void require_semiring(const FiniteSemiring &R) {
  auto report = verify_axioms(R);
  if (!report.ok()) {
    const auto &v = report.violations.front();
    throw InputError("not a semiring: " + v.axiom + " fails at (" + std::to_string(v.x) + "," +
                     std::to_string(v.y) + "," + std::to_string(v.z) + ")");
  }
}

inline bool is_additively_idempotent(const FiniteSemiring &R) {
  for (std::size_t x = 0; x < R.size(); ++x)
    if (R.add(x, x) != x)
      return false;
  return true;
}

/// (R,+) as a semilattice; requires additive idempotency.
inline FiniteSemilattice additive_semilattice(const FiniteSemiring &R) {
  if (!is_additively_idempotent(R))
    throw InputError("addition is not idempotent");
  return FiniteSemilattice(R.add_table());
}

/// Opposite semiring: r ·op s = s · r.
inline FiniteSemiring opposite(const FiniteSemiring &R) {
  const std::size_t n = R.size();
  Table mul = Table::square(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      mul(x, y) = R.mul(y, x);
  return FiniteSemiring(R.add_table(), std::move(mul));
}

/// Componentwise product; (x, y) is indexed x * |S| + y.
inline FiniteSemiring direct_product(const FiniteSemiring &R, const FiniteSemiring &S) {
  const std::size_t n = R.size() * S.size();
  Table add = Table::square(n), mul = Table::square(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t x1 = a / S.size(), y1 = a % S.size();
      const std::size_t x2 = b / S.size(), y2 = b % S.size();
      add(a, b) = static_cast<Elem>(R.add(x1, x2) * S.size() + S.add(y1, y2));
      mul(a, b) = static_cast<Elem>(R.mul(x1, x2) * S.size() + S.mul(y1, y2));
    }
  return FiniteSemiring(std::move(add), std::move(mul));
}

/// The two-element Boolean semiring: 1 + 1 = 1.
inline FiniteSemiring boolean_semiring() {
  return FiniteSemiring(Table::from_rows({{0, 1}, {1, 1}}), Table::from_rows({{0, 0}, {0, 1}}));
}

// ---------------------------------------------------------------------------
// Structure

/// Behavior of the greatest element. Absorbing is split by property (*) of
/// a faithful irreducible semimodule, which structure() cannot see; the
/// characterization layer refines it into AbsorbingStar / AbsorbingNoStar.
enum class CaseTag { NotApplicable, Neither, RightNotLeft, LeftNotRight, Absorbing, AbsorbingStar, AbsorbingNoStar };

inline std::string_view to_string(CaseTag t) {
  switch (t) {
  case CaseTag::NotApplicable: return "not-applicable";
  case CaseTag::Neither: return "neither";
  case CaseTag::RightNotLeft: return "right-not-left";
  case CaseTag::LeftNotRight: return "left-not-right";
  case CaseTag::Absorbing: return "absorbing";
  case CaseTag::AbsorbingStar: return "absorbing-star";
  case CaseTag::AbsorbingNoStar: return "absorbing-nostar";
  }
  return "?";
}

inline std::optional<CaseTag> parse_case_tag(std::string_view s) {
  for (CaseTag t : {CaseTag::NotApplicable, CaseTag::Neither, CaseTag::RightNotLeft, CaseTag::LeftNotRight,
                    CaseTag::Absorbing, CaseTag::AbsorbingStar, CaseTag::AbsorbingNoStar})
    if (to_string(t) == s)
      return t;
  return std::nullopt;
}

/// True for the absorbing tag and both of its refinements.
inline bool is_absorbing_tag(CaseTag t) {
  return t == CaseTag::Absorbing || t == CaseTag::AbsorbingStar || t == CaseTag::AbsorbingNoStar;
}

struct StructureReport {
  bool additively_idempotent = false;
  std::optional<Elem> greatest;
  bool greatest_left_absorbing = false;  // ∞·s = ∞ for all s
  bool greatest_right_absorbing = false; // s·∞ = ∞ for all s
  std::optional<Elem> zero;
  std::optional<Elem> additive_neutral;
  std::optional<Elem> multiplicative_neutral;
  CaseTag tag = CaseTag::NotApplicable;
};

inline std::optional<Elem> additive_neutral(const FiniteSemiring &R) {
  for (std::size_t z = 0; z < R.size(); ++z) {
    bool ok = true;
    for (std::size_t x = 0; x < R.size() && ok; ++x)
      ok = R.add(z, x) == x;
    if (ok)
      return static_cast<Elem>(z);
  }
  return std::nullopt;
}

inline std::optional<Elem> multiplicative_neutral(const FiniteSemiring &R) {
  for (std::size_t e = 0; e < R.size(); ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < R.size() && ok; ++x)
      ok = R.mul(e, x) == x && R.mul(x, e) == x;
    if (ok)
      return static_cast<Elem>(e);
  }
  return std::nullopt;
}

inline StructureReport structure(const FiniteSemiring &R) {
  StructureReport s;
  const std::size_t n = R.size();
  s.additively_idempotent = is_additively_idempotent(R);
  s.additive_neutral = additive_neutral(R);
  s.multiplicative_neutral = multiplicative_neutral(R);
  if (s.additive_neutral) {
    const Elem z = *s.additive_neutral;
    bool absorbing = true;
    for (std::size_t x = 0; x < n && absorbing; ++x)
      absorbing = R.mul(z, x) == z && R.mul(x, z) == z;
    if (absorbing)
      s.zero = z;
  }
  if (!s.additively_idempotent)
    return s;
  Elem top = 0;
  for (std::size_t x = 1; x < n; ++x)
    top = R.add(top, x);
  s.greatest = top;
  s.greatest_left_absorbing = s.greatest_right_absorbing = true;
  for (std::size_t x = 0; x < n; ++x) {
    s.greatest_left_absorbing = s.greatest_left_absorbing && R.mul(top, x) == top;
    s.greatest_right_absorbing = s.greatest_right_absorbing && R.mul(x, top) == top;
  }
  if (n <= 2)
    return s;
  if (s.greatest_left_absorbing && s.greatest_right_absorbing)
    s.tag = CaseTag::Absorbing;
  else if (s.greatest_right_absorbing)
    s.tag = CaseTag::RightNotLeft;
  else if (s.greatest_left_absorbing)
    s.tag = CaseTag::LeftNotRight;
  else
    s.tag = CaseTag::Neither;
  return s;
}

/// |R·R|: number of distinct products.
inline std::size_t product_set_size(const FiniteSemiring &R) {
  std::vector<bool> seen(R.size(), false);
  for (Elem v : R.mul_table().cells())
    seen[v] = true;
  return static_cast<std::size_t>(std::count(seen.begin(), seen.end(), true));
}

// ---------------------------------------------------------------------------
// Congruences

/// Unary translations x+t, t·x, x·t for every t.
inline std::vector<std::vector<Elem>> semiring_translations(const FiniteSemiring &R) {
  const std::size_t n = R.size();
  std::vector<std::vector<Elem>> maps;
  maps.reserve(3 * n);
  for (std::size_t t = 0; t < n; ++t) {
    std::vector<Elem> plus(n), left(n), right(n);
    for (std::size_t x = 0; x < n; ++x) {
      plus[x] = R.add(x, t);
      left[x] = R.mul(t, x);
      right[x] = R.mul(x, t);
    }
    maps.push_back(std::move(plus));
    maps.push_back(std::move(left));
    maps.push_back(std::move(right));
  }
  return maps;
}

inline Partition principal_congruence(const FiniteSemiring &R, Elem a, Elem b) {
  if (a >= R.size() || b >= R.size())
    throw InputError("element index out of range");
  return close_equivalence(Partition::identity(R.size()), {{a, b}}, semiring_translations(R));
}

inline bool is_congruence(const FiniteSemiring &R, const Partition &p) {
  return p.size() == R.size() && is_compatible(p, semiring_translations(R));
}

/// The complete congruence lattice, sorted by block vector (full first,
/// identity last).
inline std::vector<Partition> all_congruences(const FiniteSemiring &R) {
  return all_compatible_equivalences(R.size(), semiring_translations(R));
}

/// Simple iff every principal congruence of a distinct pair is full.
inline bool is_simple(const FiniteSemiring &R) {
  const auto maps = semiring_translations(R);
  const auto id = Partition::identity(R.size());
  for (Elem a = 0; a < R.size(); ++a)
    for (Elem b = static_cast<Elem>(a + 1); b < R.size(); ++b)
      if (!close_equivalence(id, {{a, b}}, maps).is_full())
        return false;
  return true;
}

/// Tables on blocks, block ids as in the partition.
inline FiniteSemiring quotient(const FiniteSemiring &R, const Partition &c) {
  if (!is_congruence(R, c))
    throw InputError("partition is not a congruence");
  const auto classes = c.classes();
  const std::size_t k = classes.size();
  Table add = Table::square(k), mul = Table::square(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      add(i, j) = c.block(R.add(classes[i][0], classes[j][0]));
      mul(i, j) = c.block(R.mul(classes[i][0], classes[j][0]));
    }
  return FiniteSemiring(std::move(add), std::move(mul));
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace detail {

inline std::vector<std::size_t> value_profile(const std::vector<Elem> &values, std::size_t n) {
  std::vector<std::size_t> count(n, 0);
  for (Elem v : values)
    ++count[v];
  std::sort(count.begin(), count.end());
  return count;
}

/// Relabeling-invariant fingerprint of each element.
inline std::vector<std::vector<std::size_t>> semiring_invariants(const FiniteSemiring &R) {
  const std::size_t n = R.size();
  std::vector<std::vector<std::size_t>> key(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t below = 0, above = 0;
    std::vector<Elem> add_row(n), mul_row(n), mul_col(n);
    for (std::size_t y = 0; y < n; ++y) {
      below += R.add(x, y) == x;
      above += R.add(x, y) == y;
      add_row[y] = R.add(x, y);
      mul_row[y] = R.mul(x, y);
      mul_col[y] = R.mul(y, x);
    }
    auto &k = key[x];
    k = {below, above, std::size_t{R.add(x, x) == x}, std::size_t{R.mul(x, x) == x}};
    for (const auto *vals : {&add_row, &mul_row, &mul_col}) {
      auto prof = value_profile(*vals, n);
      k.insert(k.end(), prof.begin(), prof.end());
    }
  }
  return key;
}

} // namespace detail

/// A bijection phi with phi(x+y) = phi(x)+phi(y) and phi(xy) = phi(x)phi(y).
inline std::optional<std::vector<Elem>> semiring_isomorphic(const FiniteSemiring &R, const FiniteSemiring &S) {
  const std::size_t n = R.size();
  if (S.size() != n)
    return std::nullopt;
  const auto kr = detail::semiring_invariants(R);
  const auto ks = detail::semiring_invariants(S);
  {
    auto a = kr, b = ks;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
      return std::nullopt;
  }
  // Assign rarest invariant classes first.
  std::map<std::vector<std::size_t>, std::size_t> freq;
  for (const auto &k : kr)
    ++freq[k];
  std::vector<Elem> order = identity_permutation(n);
  std::stable_sort(order.begin(), order.end(), [&](Elem a, Elem b) { return freq[kr[a]] < freq[kr[b]]; });

  const Elem unset = 0xFFFF;
  std::vector<Elem> phi(n, unset);
  std::vector<bool> used(n, false);
  auto consistent = [&](Elem x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (phi[y] == unset)
        continue;
      for (auto [a, b] : {std::pair<std::size_t, std::size_t>{x, y}, {y, x}}) {
        const Elem s = R.add(a, b), p = R.mul(a, b);
        if (phi[s] != unset && phi[s] != S.add(phi[a], phi[b]))
          return false;
        if (phi[p] != unset && phi[p] != S.mul(phi[a], phi[b]))
          return false;
      }
    }
    return true;
  };
  std::function<bool(std::size_t)> rec = [&](std::size_t k) {
    if (k == n)
      return true;
    const Elem x = order[k];
    for (std::size_t y = 0; y < n; ++y) {
      if (used[y] || ks[y] != kr[x])
        continue;
      phi[x] = static_cast<Elem>(y);
      used[y] = true;
      // Every pair whose operands and result are all assigned is checked
      // once the last of the three is placed.
      bool ok = true;
      for (std::size_t j = 0; j <= k && ok; ++j)
        ok = consistent(order[j]);
      if (ok && rec(k + 1))
        return true;
      used[y] = false;
      phi[x] = unset;
    }
    return false;
  };
  if (!rec(0))
    return std::nullopt;
  return phi;
}

/// Relabel both tables along perm (old -> new).
inline FiniteSemiring relabel(const FiniteSemiring &R, const std::vector<Elem> &perm) {
  return FiniteSemiring(relabel(R.add_table(), perm), relabel(R.mul_table(), perm));
}

} // namespace sforge

#endif // SFORGE_SEMIRING_HPP
