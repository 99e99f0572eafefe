#ifndef SFORGE_ENUMERATE_HPP
#define SFORGE_ENUMERATE_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <optional>
#include <set>
#include <thread>
#include <vector>

#include "morphism.hpp"
#include "semiring.hpp"

namespace sforge {

/// JM(A) with precomputed join, composition, evaluation and order tables.
struct EndomorphismTable {
  std::vector<JoinMorphism> maps;
  std::size_t carrier = 0;
  std::vector<std::uint16_t> join;    // join[i * m + j]
  std::vector<std::uint16_t> comp;    // comp[i * m + j] = maps[i] ∘ maps[j]
  std::vector<std::uint8_t> leq;      // leq[i * m + j]
  std::vector<Elem> apply;            // apply[i * n + x] = maps[i](x)

  std::size_t size() const { return maps.size(); }
};

inline EndomorphismTable endomorphism_table(const FiniteSemilattice &A) {
  EndomorphismTable e;
  e.maps = enumerate_morphisms(A, MorphismClass::JM);
  e.carrier = A.size();
  const std::size_t m = e.maps.size(), n = A.size();
  if (m > 0xFFFF)
    throw SizeCapError("too many join-morphisms to tabulate");
  e.join.resize(m * m);
  e.comp.resize(m * m);
  e.leq.resize(m * m);
  e.apply.resize(m * n);
  auto idx = [&](const JoinMorphism &f) {
    return static_cast<std::uint16_t>(std::lower_bound(e.maps.begin(), e.maps.end(), f) - e.maps.begin());
  };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t x = 0; x < n; ++x)
      e.apply[i * n + x] = e.maps[i](x);
    for (std::size_t j = 0; j < m; ++j) {
      e.join[i * m + j] = idx(sup(A, e.maps[i], e.maps[j]));
      e.comp[i * m + j] = idx(compose(e.maps[i], e.maps[j]));
      e.leq[i * m + j] = pointwise_leq(A, e.maps[i], e.maps[j]) ? 1 : 0;
    }
  }
  return e;
}

/// Backtracking over join-morphisms rho: A -> JM(B) that turn a product
/// on A into composition: rho(rs) = rho(r) ∘ rho(s).
///
/// With a fixed product table this enumerates representations of a semiring
/// with additive semilattice A on B. Without one (B = A) the product is
/// rs = rho(r)(s) and the search enumerates multiplications on A: left
/// distributivity puts every row in JM(A), right distributivity makes rho a
/// join-morphism, associativity is the composition law.
///
/// Rows are chosen on join-irreducibles only. The composition law forces the
/// row of any join-irreducible product as soon as both factors are known.
class HomSearch {
public:
  /// `product` null means the self-referential product rho(r)(s).
  HomSearch(const FiniteSemilattice &A, const EndomorphismTable &E, const Table *product = nullptr)
      : A_(A), E_(E), n_(A.size()), product_(product) {
    if (!product_ && E.carrier != A.size())
      throw InputError("self-referential product needs End(A)");
    gens_ = join_irreducibles(A);
    std::stable_sort(gens_.begin(), gens_.end(),
                     [&](Elem a, Elem b) { return downset(A, a).size() < downset(A, b).size(); });
    is_gen_.assign(n_, false);
    for (Elem g : gens_)
      is_gen_[g] = true;
    gens_below_.resize(n_);
    for (std::size_t x = 0; x < n_; ++x)
      for (Elem g : gens_)
        if (A.leq(g, x))
          gens_below_[x].push_back(g);
  }

  const std::vector<Elem> &generators() const { return gens_; }

  /// Runs the search with the first generator's row fixed to `first`
  /// (or all rows when nullopt). `visit` receives the rows rho(x) as
  /// indices into E.
  void run(std::optional<std::uint16_t> first,
           const std::function<void(const std::vector<std::uint16_t> &)> &visit) const {
    State s(n_);
    if (gens_.empty())
      return;
    if (first) {
      if (!assign(s, gens_.front(), *first) || !propagate(s))
        return;
      search(s, visit);
      return;
    }
    search(s, visit);
  }

private:
  static constexpr std::uint16_t kUnset = 0xFFFF;

  struct State {
    explicit State(std::size_t n) : gen_row(n, kUnset), row(n, kUnset) {}
    std::vector<std::uint16_t> gen_row;
    std::vector<std::uint16_t> row;
  };

  bool assign(State &s, Elem g, std::uint16_t v) const {
    const std::size_t m = E_.size();
    for (Elem h : gens_) {
      const std::uint16_t w = s.gen_row[h];
      if (w == kUnset)
        continue;
      if (A_.leq(h, g) && !E_.leq[w * m + v])
        return false;
      if (A_.leq(g, h) && !E_.leq[v * m + w])
        return false;
    }
    s.gen_row[g] = v;
    return true;
  }

  /// Recomputes rows of determined elements and applies forced rows until
  /// stable. False on contradiction.
  bool propagate(State &s) const {
    const std::size_t m = E_.size();
    for (;;) {
      for (std::size_t x = 0; x < n_; ++x) {
        if (s.row[x] != kUnset)
          continue;
        std::uint16_t acc = kUnset;
        bool ready = true;
        for (Elem g : gens_below_[x]) {
          const std::uint16_t w = s.gen_row[g];
          if (w == kUnset) {
            ready = false;
            break;
          }
          acc = acc == kUnset ? w : E_.join[acc * m + w];
        }
        if (ready)
          s.row[x] = acc;
      }
      // rho must be a join-morphism.
      for (std::size_t x = 0; x < n_; ++x) {
        if (s.row[x] == kUnset)
          continue;
        if (is_gen_[x] && s.row[x] != s.gen_row[x])
          return false;
        for (std::size_t y = x + 1; y < n_; ++y) {
          if (s.row[y] == kUnset)
            continue;
          const std::uint16_t j = s.row[A_.join(x, y)];
          if (j != kUnset && j != E_.join[s.row[x] * m + s.row[y]])
            return false;
        }
      }
      bool changed = false;
      for (std::size_t r = 0; r < n_; ++r) {
        if (s.row[r] == kUnset)
          continue;
        for (std::size_t t = 0; t < n_; ++t) {
          if (s.row[t] == kUnset)
            continue;
          const Elem p = product_ ? (*product_)(r, t) : E_.apply[s.row[r] * n_ + t];
          const std::uint16_t want = E_.comp[s.row[r] * m + s.row[t]];
          if (s.row[p] != kUnset) {
            if (s.row[p] != want)
              return false;
          } else if (is_gen_[p] && s.gen_row[p] == kUnset) {
            if (!assign(s, p, want))
              return false;
            changed = true;
          } else if (is_gen_[p] && s.gen_row[p] != want) {
            return false;
          }
        }
      }
      if (!changed)
        return true;
    }
  }

  void search(const State &s, const std::function<void(const std::vector<std::uint16_t> &)> &visit) const {
    std::optional<Elem> next;
    for (Elem g : gens_)
      if (s.gen_row[g] == kUnset) {
        next = g;
        break;
      }
    if (!next) {
      visit(s.row);
      return;
    }
    for (std::size_t v = 0; v < E_.size(); ++v) {
      State child = s;
      if (!assign(child, *next, static_cast<std::uint16_t>(v)) || !propagate(child))
        continue;
      search(child, visit);
    }
  }

  const FiniteSemilattice &A_;
  const EndomorphismTable &E_;
  std::size_t n_;
  std::vector<Elem> gens_;
  std::vector<bool> is_gen_;
  std::vector<std::vector<Elem>> gens_below_;
  const Table *product_;
};

/// Multiplication table from the rows found by a self-referential search.
inline Table multiplication_from_rows(const EndomorphismTable &E, const std::vector<std::uint16_t> &rows) {
  const std::size_t n = rows.size();
  Table mul = Table::square(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t t = 0; t < n; ++t)
      mul(r, t) = E.apply[rows[r] * E.carrier + t];
  return mul;
}

/// Lex-least relabeling of the multiplication table under the automorphisms
/// of the additive semilattice.
inline Table canonical_multiplication(const Table &mul, const std::vector<std::vector<Elem>> &automorphisms) {
  Table best = mul;
  for (const auto &aut : automorphisms) {
    Table t = relabel(mul, aut);
    if (t < best)
      best = std::move(t);
  }
  return best;
}

struct EnumerationOptions {
  std::size_t max_size = 5;
  std::size_t min_size = 1;
  bool simple_only = true;
  std::size_t jobs = 1;
  /// Checked between tasks; exceeding it throws TimeBudgetError.
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

class TimeBudgetError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// All additively idempotent semirings (simple ones by default) with
/// min_size <= |R| <= max_size, one per isomorphism class. Additive
/// semilattices come in enumeration order; within one, canonical
/// multiplication tables are sorted. The output does not depend on jobs.
inline std::vector<FiniteSemiring> enumerate_semirings(const EnumerationOptions &opt) {
  if (opt.max_size == 0)
    throw InputError("max size must be positive");
  struct Task {
    std::size_t sl;
    std::optional<std::uint16_t> first;
  };
  std::vector<FiniteSemilattice> additive;
  std::vector<EndomorphismTable> ends;
  std::vector<std::vector<std::vector<Elem>>> auts;
  std::vector<Task> tasks;
  for (std::size_t n = std::max<std::size_t>(opt.min_size, 1); n <= opt.max_size; ++n)
    for (auto &A : enumerate_semilattices(n)) {
      const std::size_t k = additive.size();
      auts.push_back(canonical_form(A).automorphisms);
      ends.push_back(endomorphism_table(A));
      additive.push_back(std::move(A));
      // Split on the row of the first generator so work spreads evenly.
      for (std::size_t v = 0; v < ends.back().size(); ++v)
        tasks.push_back({k, static_cast<std::uint16_t>(v)});
    }
  std::vector<std::set<Table>> found(tasks.size());
  std::atomic<std::size_t> cursor{0};
  std::atomic<bool> expired{false};
  auto worker = [&]() {
    for (;;) {
      if (opt.deadline && std::chrono::steady_clock::now() > *opt.deadline) {
        expired = true;
        return;
      }
      const std::size_t i = cursor.fetch_add(1);
      if (i >= tasks.size())
        return;
      const Task &t = tasks[i];
      const FiniteSemilattice &A = additive[t.sl];
      HomSearch search(A, ends[t.sl]);
      search.run(t.first, [&](const std::vector<std::uint16_t> &rows) {
        const Table mul = multiplication_from_rows(ends[t.sl], rows);
        if (opt.simple_only && !is_simple(FiniteSemiring(A.table(), mul)))
          return;
        found[i].insert(canonical_multiplication(mul, auts[t.sl]));
      });
    }
  };
  const std::size_t jobs = std::max<std::size_t>(opt.jobs, 1);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < jobs; ++j)
      pool.emplace_back(worker);
    for (auto &th : pool)
      th.join();
  }
  if (expired)
    throw TimeBudgetError("enumeration exceeded its time budget");
  std::vector<FiniteSemiring> out;
  std::size_t i = 0;
  for (std::size_t k = 0; k < additive.size(); ++k) {
    std::set<Table> merged;
    for (; i < tasks.size() && tasks[i].sl == k; ++i)
      merged.insert(found[i].begin(), found[i].end());
    for (const auto &mul : merged)
      out.emplace_back(additive[k].table(), mul);
  }
  return out;
}

} // namespace sforge

#endif // SFORGE_ENUMERATE_HPP
