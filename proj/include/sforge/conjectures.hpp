#ifndef SFORGE_CONJECTURES_HPP
#define SFORGE_CONJECTURES_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "box_construction.hpp"
#include "characterize.hpp"
#include "enumerate.hpp"
#include "io.hpp"

namespace sforge {

struct ConjectureFinding {
  std::string conjecture;
  FiniteSemiring ring;
  /// Semimodule tables for the sub/quotient conjecture.
  std::optional<FiniteSemilattice> module;
  std::optional<Table> action;
  std::string detail;
};

struct ConjectureReport {
  std::size_t semirings = 0;
  std::size_t semimodules = 0;
  std::size_t nostar_semirings = 0;
  std::vector<ConjectureFinding> findings;
};

struct ConjectureOptions {
  /// Largest semimodule tried; 0 means |R|.
  std::size_t max_module = 0;
};

/// Every idempotent R-semimodule on a semilattice of the given size, as the
/// action table of a homomorphism R -> JM(M). Callback receives the action.
inline void for_each_idempotent_semimodule(const FiniteSemiring &R, const FiniteSemilattice &M,
                                           const EndomorphismTable &E,
                                           const std::function<void(const Table &)> &visit) {
  const FiniteSemilattice A = additive_semilattice(R);
  HomSearch search(A, E, &R.mul_table());
  search.run(std::nullopt, [&](const std::vector<std::uint16_t> &rows) {
    Table action(R.size(), M.size());
    for (std::size_t r = 0; r < R.size(); ++r)
      for (std::size_t x = 0; x < M.size(); ++x)
        action(r, x) = E.apply[rows[r] * M.size() + x];
    visit(action);
  });
}

/// Sub-irreducible iff quotient-irreducible, over all idempotent semimodules
/// up to the size bound.
inline void check_sub_quotient(const FiniteSemiring &R, const ConjectureOptions &opt, ConjectureReport &rep) {
  const std::size_t bound = opt.max_module ? opt.max_module : R.size();
  for (std::size_t m = 1; m <= bound; ++m)
    for (const auto &M : enumerate_semilattices(m)) {
      const EndomorphismTable E = endomorphism_table(M);
      for_each_idempotent_semimodule(R, M, E, [&](const Table &action) {
        ++rep.semimodules;
        const RSemimodule mod(R, M.table(), action);
        const auto irr = irreducibility(mod);
        if (irr.sub_irreducible != irr.quotient_irreducible)
          rep.findings.push_back({"sub-quotient", R, M, action,
                                  irr.sub_irreducible ? "sub-irreducible but not quotient-irreducible"
                                                      : "quotient-irreducible but not sub-irreducible"});
      });
    }
}

/// Absorbing R whose smallest faithful semimodule lacks (*) must be
/// isomorphic to a box construction.
inline void check_box_conjecture(const FiniteSemiring &R, ConjectureReport &rep) {
  const auto st = structure(R);
  if (st.tag != CaseTag::Absorbing)
    return;
  const RSemimodule M = smallest_faithful(R);
  if (has_star_property(M.semilattice()).holds)
    return;
  ++rep.nostar_semirings;
  if (!recognize_box(R, M.size()))
    rep.findings.push_back({"box", R, M.semilattice(), M.action_table(),
                            "no box construction with |L boxtimes K| = " + std::to_string(M.size()) + " matches"});
}

/// Checks a corpus entry before any suite runs.
inline void validate_corpus_entry(const FiniteSemiring &R, const std::string &where) {
  try {
    require_simple_idempotent(R);
  } catch (const std::exception &e) {
    throw InputError(where + ": " + e.what());
  }
}

/// Simple additively idempotent semirings read from every .sr file in dir,
/// in file-name order. Any malformed or out-of-scope entry aborts.
inline std::vector<FiniteSemiring> load_corpus(const std::string &dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir))
    throw InputError("corpus directory " + dir + " does not exist");
  std::vector<fs::path> files;
  for (const auto &e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".sr")
      files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<FiniteSemiring> out;
  for (const auto &f : files) {
    FiniteSemiring R = [&] {
      try {
        return parse_semiring(read_file(f.string()));
      } catch (const InputError &e) {
        throw InputError(f.filename().string() + ": " + e.what());
      }
    }();
    validate_corpus_entry(R, f.filename().string());
    out.push_back(std::move(R));
  }
  return out;
}

inline ConjectureReport run_conjectures(const std::vector<FiniteSemiring> &corpus, const ConjectureOptions &opt = {}) {
  for (std::size_t i = 0; i < corpus.size(); ++i)
    validate_corpus_entry(corpus[i], "corpus entry " + std::to_string(i));
  ConjectureReport rep;
  for (const auto &R : corpus) {
    ++rep.semirings;
    check_sub_quotient(R, opt, rep);
    check_box_conjecture(R, rep);
  }
  return rep;
}

inline ordered_json findings_json(const ConjectureReport &rep) {
  ordered_json j;
  j["semirings"] = rep.semirings;
  j["semimodules"] = rep.semimodules;
  j["nostar_semirings"] = rep.nostar_semirings;
  ordered_json list = ordered_json::array();
  for (const auto &f : rep.findings) {
    ordered_json e;
    e["conjecture"] = f.conjecture;
    e["ring"] = semiring_json(f.ring);
    if (f.module)
      e["module"] = format_semilattice(*f.module);
    if (f.action)
      e["action"] = table_json(*f.action);
    e["detail"] = f.detail;
    list.push_back(std::move(e));
  }
  j["counterexamples"] = std::move(list);
  return j;
}

} // namespace sforge

#endif // SFORGE_CONJECTURES_HPP
