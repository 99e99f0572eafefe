// semiring_forge: command-line front end for the sforge library.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "sforge/sforge.hpp"

using namespace sforge;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kInput = 2;

const char *yes_no(bool b) { return b ? "true" : "false"; }

/// "1 0;0 1" -> rows of integers.
std::vector<std::vector<int>> parse_matrix(const std::string &text) {
  std::vector<std::vector<int>> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) {
    std::istringstream in(row);
    std::vector<int> r;
    std::string tok;
    while (in >> tok) {
      try {
        std::size_t used = 0;
        r.push_back(std::stoi(tok, &used));
        if (used != tok.size())
          throw std::invalid_argument(tok);
      } catch (const std::exception &) {
        throw InputError("'" + tok + "' is not an integer");
      }
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<Elem> to_elems(const std::vector<int> &v) {
  std::vector<Elem> out;
  for (int x : v) {
    if (x < 0 || x > 0xFFFF)
      throw InputError("index " + std::to_string(x) + " out of range");
    out.push_back(static_cast<Elem>(x));
  }
  return out;
}

FiniteSemiring load_semiring(const std::string &path) {
  const std::string text = read_file(path);
  if (path.size() > 5 && path.substr(path.size() - 5) == ".json") {
    try {
      return semiring_from_json(ordered_json::parse(text));
    } catch (const nlohmann::json::parse_error &e) {
      throw InputError(std::string("malformed JSON: ") + e.what());
    }
  }
  return parse_semiring(text);
}

CaseTag case_of(const FiniteSemiring &R) {
  if (R.size() > 2 && is_additively_idempotent(R) && is_simple(R))
    return classify_case(R);
  return structure(R).tag;
}

// ---------------------------------------------------------------------------

struct CheckArgs {
  std::string file;
  bool json = false;
};

int cmd_check(const CheckArgs &a) {
  const FiniteSemiring R = load_semiring(a.file);
  const AxiomReport ax = verify_axioms(R);
  if (!ax.ok()) {
    std::cout << "axioms: FAIL\n";
    for (const auto &v : ax.violations) {
      std::cout << "  " << v.axiom << " at " << v.x << ' ' << v.y << ' ' << v.z << '\n';
    }
    return kFail;
  }
  const auto st = structure(R);
  const bool simple = is_simple(R);
  std::optional<RoundTrip> rt;
  if (simple && st.additively_idempotent && R.size() > 2)
    rt = theorem_roundtrip(R);
  if (a.json) {
    ordered_json j;
    j["size"] = R.size();
    j["axioms"] = true;
    j["additively_idempotent"] = st.additively_idempotent;
    j["simple"] = simple;
    j["case"] = std::string(to_string(rt ? rt->tag : st.tag));
    if (rt)
      j["roundtrip"] = verdict_json(*rt);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "size: " << R.size() << '\n'
              << "axioms: ok\n"
              << "additively_idempotent: " << yes_no(st.additively_idempotent) << '\n'
              << "simple: " << yes_no(simple) << '\n'
              << "case: " << to_string(rt ? rt->tag : st.tag) << '\n';
    if (st.zero)
      std::cout << "zero: " << *st.zero << '\n';
    if (rt) {
      std::cout << "module_size: " << rt->module_size << '\n'
                << "roundtrip: " << (rt->verdict ? "ok" : "FAIL") << '\n';
      for (const auto &w : rt->witnesses)
        std::cout << "  " << w << '\n';
    }
  }
  return rt && !rt->verdict ? kFail : kOk;
}

// ---------------------------------------------------------------------------

struct EnumerateArgs {
  std::size_t max_size = 5;
  std::size_t min_size = 1;
  std::string case_tag;
  std::size_t jobs = 1;
  std::string out_dir;
  bool all = false;
  bool summary = false;
  double time_budget = 0;
};

int cmd_enumerate(const EnumerateArgs &a) {
  if (a.max_size == 0)
    throw InputError("--max-size must be at least 1");
  if (a.max_size > 5 && a.time_budget <= 0)
    throw InputError("--max-size above 5 needs --time-budget SECONDS");
  std::optional<CaseTag> filter;
  if (!a.case_tag.empty()) {
    filter = parse_case_tag(a.case_tag);
    if (!filter)
      throw InputError("unknown case tag '" + a.case_tag + "'");
  }
  EnumerationOptions opt;
  opt.max_size = a.max_size;
  opt.min_size = a.min_size;
  opt.simple_only = !a.all;
  opt.jobs = a.jobs;
  if (a.time_budget > 0)
    opt.deadline = std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                       std::chrono::duration<double>(a.time_budget));
  const auto found = enumerate_semirings(opt);

  ordered_json list = ordered_json::array();
  std::map<std::size_t, std::size_t> by_size;
  std::map<std::string, std::size_t> by_case;
  if (!a.out_dir.empty())
    std::filesystem::create_directories(a.out_dir);
  for (const auto &R : found) {
    const CaseTag tag = case_of(R);
    if (filter && tag != *filter && !(*filter == CaseTag::Absorbing && is_absorbing_tag(tag)))
      continue;
    const std::size_t k = ++by_size[R.size()];
    ++by_case[std::string(to_string(tag))];
    if (!a.out_dir.empty())
      write_file(a.out_dir + "/R" + std::to_string(R.size()) + "-" + std::to_string(k) + ".sr", format_semiring(R));
    if (!a.summary) {
      ordered_json e;
      e["size"] = R.size();
      e["case"] = std::string(to_string(tag));
      e["add"] = table_json(R.add_table());
      e["mul"] = table_json(R.mul_table());
      list.push_back(std::move(e));
    }
  }
  ordered_json j;
  j["max_size"] = a.max_size;
  j["simple_only"] = !a.all;
  j["case"] = a.case_tag.empty() ? ordered_json() : ordered_json(a.case_tag);
  std::size_t total = 0;
  ordered_json sizes = ordered_json::object();
  for (const auto &[n, c] : by_size) {
    sizes[std::to_string(n)] = c;
    total += c;
  }
  j["count"] = total;
  j["counts_by_size"] = std::move(sizes);
  j["counts_by_case"] = by_case;
  if (!a.summary)
    j["semirings"] = std::move(list);
  std::cout << j.dump(1) << '\n';
  return kOk;
}

// ---------------------------------------------------------------------------

int cmd_examples(bool print) {
  const std::string actual = regenerate_examples();
  if (print)
    std::cout << actual;
  if (auto m = compare_golden(kExamplesGolden, actual)) {
    std::cerr << "golden mismatch at line " << m->line << ", column " << m->column << "\n"
              << "  expected: " << m->expected << "\n"
              << "  actual:   " << m->actual << '\n';
    return kFail;
  }
  if (!print)
    std::cout << "examples: all tables match (" << std::count(actual.begin(), actual.end(), '\n') << " lines)\n";
  return kOk;
}

// ---------------------------------------------------------------------------

struct ConstructArgs {
  std::string kind;
  std::string lattice = "chain:3";
  std::string generators;
  std::size_t m = 1, n = 1;
  std::string matrix = "1";
  std::string group = "trivial";
  std::vector<std::string> perms;
  std::size_t cyclic = 2;
  std::string out;
  bool json = false;
};

struct Check {
  std::string name;
  bool ok;
};

std::vector<Permutation> box_group(const ConstructArgs &a) {
  std::vector<Permutation> S;
  if (!a.perms.empty()) {
    for (const auto &p : a.perms) {
      const auto rows = parse_matrix(p);
      if (rows.size() != 1)
        throw InputError("--perm takes one permutation");
      S.push_back(to_elems(rows[0]));
    }
    return S;
  }
  if (a.group == "trivial")
    return {identity_permutation(a.n)};
  if (a.group == "cyclic") {
    for (std::size_t s = 0; s < a.n; ++s) {
      Permutation p(a.n);
      for (std::size_t x = 0; x < a.n; ++x)
        p[x] = static_cast<Elem>((x + s) % a.n);
      S.push_back(std::move(p));
    }
    return S;
  }
  if (a.group == "full") {
    Permutation p = identity_permutation(a.n);
    do
      S.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return S;
  }
  if (a.group.rfind("regular:", 0) == 0) {
    const auto groups = regular_subgroups(a.n);
    std::size_t k = 0;
    try {
      k = std::stoul(a.group.substr(8));
    } catch (const std::exception &) {
      throw InputError("bad group index in '" + a.group + "'");
    }
    if (k >= groups.size())
      throw InputError("there are " + std::to_string(groups.size()) + " regular groups of degree " +
                       std::to_string(a.n));
    return groups[k];
  }
  throw InputError("unknown group '" + a.group + "'");
}

/// The class's full morphism set, or the closure of the given generators.
MorphismSemiring class_semiring(const FiniteSemilattice &L, MorphismClass cls, const std::string &generators) {
  if (generators.empty())
    return morphism_semiring(L, enumerate_morphisms(L, cls));
  return closure_semiring(L, parse_morphisms(read_file(generators), L.size()));
}

int cmd_construct(const ConstructArgs &a) {
  std::optional<MorphismSemiring> ms;
  FiniteSemiring R = boolean_semiring();
  std::vector<Check> checks;
  auto simple_with = [&](CaseTag want) {
    checks.push_back({"simple", R.size() > 2 && is_simple(R)});
    checks.push_back({std::string("case ") + std::string(to_string(want)), structure(R).tag == want});
  };
  auto conditions = [&](const std::vector<int> &which) {
    const auto rep = check_conditions(ms->L, ms->maps, which);
    for (int c : which)
      checks.push_back({"condition (" + std::to_string(c) + ")", rep.holds(c)});
  };
  auto in_class = [&](MorphismClass cls) {
    bool ok = true;
    for (const auto &f : ms->maps)
      ok = ok && is_member(ms->L, f, cls);
    checks.push_back({std::string("maps in ") + std::string(to_string(cls)), ok});
  };

  if (a.kind == "zum") {
    const auto K = as_lattice(semilattice_from_spec(a.lattice));
    if (!K)
      throw InputError("zum needs a lattice");
    std::vector<JoinMorphism> gens;
    if (a.generators.empty()) {
      for (Elem x = 0; x < K->size(); ++x)
        for (Elem y = 0; y < K->size(); ++y)
          gens.push_back(make_e(*K, x, y));
    } else {
      gens = parse_morphisms(read_file(a.generators), K->size());
    }
    ms = closure_semiring(K->semilattice(), gens);
    R = ms->ring;
    in_class(MorphismClass::Res);
    bool all_e = true;
    for (Elem x = 0; x < K->size(); ++x)
      for (Elem y = 0; y < K->size(); ++y)
        all_e = all_e && index_of(ms->maps, make_e(*K, x, y)).has_value();
    checks.push_back({"every e_{a,b} present", all_e});
    simple_with(CaseTag::Neither);
    checks.push_back({"zero", structure(R).zero.has_value()});
  } else if (a.kind == "res1") {
    const FiniteSemilattice L = semilattice_from_spec(a.lattice);
    if (!L.is_lattice())
      throw InputError("res1 needs a lattice");
    ms = class_semiring(L, MorphismClass::Res1, a.generators);
    R = ms->ring;
    in_class(MorphismClass::Res1);
    conditions({6, 7, 8});
    simple_with(CaseTag::RightNotLeft);
  } else if (a.kind == "jm") {
    ms = class_semiring(semilattice_from_spec(a.lattice), MorphismClass::JM, a.generators);
    R = ms->ring;
    conditions({3, 4, 5});
    simple_with(CaseTag::LeftNotRight);
  } else if (a.kind == "jm1") {
    ms = class_semiring(semilattice_from_spec(a.lattice), MorphismClass::JM1, a.generators);
    R = ms->ring;
    in_class(MorphismClass::JM1);
    conditions({1, 2});
    simple_with(CaseTag::Absorbing);
  } else if (a.kind == "box") {
    BoxConstructionSpec spec{semilattice_from_spec(a.lattice), a.n, box_group(a), {}};
    const BoxResult res = construct_box(spec);
    ms = res.semiring;
    R = ms->ring;
    checks.push_back({"condition (a)", res.condition_a});
    checks.push_back({"condition (b)", res.condition_b});
    checks.push_back({"condition (c)", res.condition_c});
    checks.push_back({"simple", res.simple});
    checks.push_back({"greatest absorbing", res.greatest_absorbing});
    if (res.irreducible_without_star)
      checks.push_back({"irreducible without (*)", *res.irreducible_without_star});
    else
      std::cerr << "irreducibility check skipped: " << res.skipped << '\n';
  } else if (a.kind == "monico") {
    SandwichSpec spec;
    spec.m = a.m;
    spec.n = a.n;
    spec.P = parse_matrix(a.matrix);
    R = monico_sandwich(spec);
    checks.push_back({"axioms", verify_axioms(R).ok()});
    checks.push_back({"simple", is_simple(R)});
    const Elem inf = static_cast<Elem>(R.size() - 1);
    bool absorbing = true;
    for (Elem x = 0; x < R.size(); ++x)
      absorbing = absorbing && R.mul(x, inf) == inf && R.mul(inf, x) == inf && R.add(x, x) == inf;
    checks.push_back({"R+R = {inf}, inf absorbing", absorbing});
  } else if (a.kind == "vgroup") {
    R = v_of_group(cyclic_group(a.cyclic));
    checks.push_back({"axioms", verify_axioms(R).ok()});
    checks.push_back({"simple", is_simple(R)});
    const auto st = structure(R);
    checks.push_back({"greatest absorbing", st.greatest_left_absorbing && st.greatest_right_absorbing});
    if (a.cyclic > 1)
      checks.push_back({"(R,+) lacks (*)", !has_star_property(additive_semilattice(R)).holds});
  } else {
    throw InputError("unknown construction '" + a.kind + "'");
  }

  std::string body;
  if (a.json)
    body = (ms ? semiring_json(R, {}, &ms->L, &ms->maps) : semiring_json(R)).dump(2) + "\n";
  else
    body = format_semiring(R);
  if (a.out.empty())
    std::cout << body;
  else
    write_file(a.out, body);

  bool ok = true;
  for (const auto &c : checks) {
    std::cerr << c.name << ": " << (c.ok ? "ok" : "FAIL") << '\n';
    ok = ok && c.ok;
  }
  return ok ? kOk : kFail;
}

// ---------------------------------------------------------------------------

int cmd_embed(const std::string &file) {
  const FiniteSemiring R = load_semiring(file);
  require_semiring(R);
  const RSemimodule M = smallest_faithful(R);
  const RoundTrip rt = theorem_roundtrip(R);
  const auto T = embedding_T(M).T;
  const FiniteSemilattice ML = M.semilattice();
  ordered_json j;
  j["case"] = std::string(to_string(rt.tag));
  j["semimodule"] = semimodule_json(M);
  j["star"] = has_star_property(ML).holds;
  j["morphisms"] = morphisms_json(T);
  std::vector<int> which;
  switch (rt.tag) {
  case CaseTag::RightNotLeft: which = {6, 7, 8}; break;
  case CaseTag::AbsorbingStar: which = {1, 2}; break;
  case CaseTag::LeftNotRight: which = {3, 4, 5}; break;
  default: break;
  }
  j["conditions"] = which.empty() ? ordered_json::object() : conditions_json(check_conditions(ML, T, which));
  j["roundtrip"] = verdict_json(rt);
  std::cout << j.dump(2) << '\n';
  return rt.verdict ? kOk : kFail;
}

// ---------------------------------------------------------------------------

struct ConjectureArgs {
  std::size_t max_size = 5;
  std::string corpus;
  std::string findings = "conjecture_findings.json";
  std::size_t max_module = 0;
  bool strict = false;
};

int cmd_conjectures(const ConjectureArgs &a) {
  std::vector<FiniteSemiring> corpus;
  if (!a.corpus.empty()) {
    corpus = load_corpus(a.corpus);
  } else {
    if (a.max_size < 3)
      throw InputError("--max-size must be at least 3");
    if (a.max_size > 6)
      throw InputError("--max-size above 6 is not supported by the conjecture suites");
    EnumerationOptions opt;
    opt.min_size = 3;
    opt.max_size = a.max_size;
    corpus = enumerate_semirings(opt);
  }
  ConjectureOptions copt;
  copt.max_module = a.max_module;
  const ConjectureReport rep = run_conjectures(corpus, copt);
  write_file(a.findings, findings_json(rep).dump(2) + "\n");
  std::cout << "semirings: " << rep.semirings << '\n'
            << "semimodules checked: " << rep.semimodules << '\n'
            << "absorbing without (*): " << rep.nostar_semirings << '\n'
            << "counterexamples: " << rep.findings.size() << '\n'
            << "findings written to " << a.findings << '\n';
  if (!rep.findings.empty()) {
    std::cout << "*** COUNTEREXAMPLES FOUND ***\n";
    for (const auto &f : rep.findings)
      std::cout << "  [" << f.conjecture << "] size " << f.ring.size() << ": " << f.detail << '\n';
  }
  return a.strict && !rep.findings.empty() ? kFail : kOk;
}

// ---------------------------------------------------------------------------

int cmd_congruences(const std::string &file) {
  const FiniteSemiring R = load_semiring(file);
  require_semiring(R);
  const auto cs = all_congruences(R);
  std::cout << "congruences: " << cs.size() << '\n';
  for (const auto &c : cs) {
    const auto classes = c.classes();
    for (std::size_t b = 0; b < classes.size(); ++b) {
      std::cout << (b ? " | " : "");
      for (std::size_t i = 0; i < classes[b].size(); ++i)
        std::cout << (i ? " " : "") << classes[b][i];
    }
    std::cout << '\n';
  }
  std::cout << "simple: " << yes_no(is_simple(R)) << '\n';
  return kOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Finite simple additively idempotent semirings: checks, constructions, enumeration"};
  app.require_subcommand(1);

  CheckArgs check;
  auto *c_check = app.add_subcommand("check", "Verify axioms, simplicity and the case round trip of a .sr file");
  c_check->add_option("file", check.file, "semiring file (.sr or .json)")->required();
  c_check->add_flag("--json", check.json, "print the verdict as JSON");

  EnumerateArgs en;
  auto *c_en = app.add_subcommand("enumerate", "List semirings up to isomorphism");
  c_en->add_option("--max-size", en.max_size, "largest order")->required();
  c_en->add_option("--min-size", en.min_size, "smallest order");
  c_en->add_option("--case", en.case_tag, "keep one case tag only");
  c_en->add_option("--jobs", en.jobs, "worker threads")->check(CLI::PositiveNumber);
  c_en->add_option("--out", en.out_dir, "also write one .sr file per semiring here");
  c_en->add_flag("--all", en.all, "keep non-simple semirings too");
  c_en->add_flag("--summary", en.summary, "counts only");
  c_en->add_option("--time-budget", en.time_budget, "seconds; required above order 5");

  bool print_examples = false;
  auto *c_ex = app.add_subcommand("examples", "Rebuild the worked examples and compare with the stored tables");
  c_ex->add_flag("--print", print_examples, "print the regenerated tables");

  ConstructArgs con;
  auto *c_con = app.add_subcommand("construct", "Build a semiring from a named construction");
  c_con->add_option("kind", con.kind, "zum, res1, jm, jm1, box, monico or vgroup")->required();
  c_con->add_option("--lattice", con.lattice, "chain:N, vee:N, diamond or a .sl file");
  c_con->add_option("--generators", con.generators, "file of generator images, one map per line");
  c_con->add_option("--m", con.m, "sandwich: |I|");
  c_con->add_option("--n", con.n, "sandwich: |J|; box: |K| - 1");
  c_con->add_option("--P", con.matrix, "sandwich matrix, rows separated by ';'");
  c_con->add_option("--group", con.group, "box: trivial, cyclic, full or regular:K");
  c_con->add_option("--perm", con.perms, "box: one permutation of 0..n-1 (repeatable)");
  c_con->add_option("--cyclic", con.cyclic, "vgroup: order of the cyclic group");
  c_con->add_option("--out", con.out, "write here instead of stdout");
  c_con->add_flag("--json", con.json, "JSON with the realization");

  std::string embed_file;
  auto *c_emb = app.add_subcommand("embed", "Smallest faithful semimodule and the induced morphism realization");
  c_emb->add_option("file", embed_file, "semiring file")->required();

  ConjectureArgs conj;
  auto *c_conj = app.add_subcommand("conjectures", "Run both conjecture suites");
  c_conj->add_option("--max-size", conj.max_size, "largest corpus order");
  c_conj->add_option("--corpus", conj.corpus, "directory of .sr files instead of enumeration");
  c_conj->add_option("--findings", conj.findings, "JSON file for the findings");
  c_conj->add_option("--max-module", conj.max_module, "largest semimodule tried (default |R|)");
  c_conj->add_flag("--strict", conj.strict, "exit 1 when a counterexample is found");

  std::string cong_file;
  auto *c_cong = app.add_subcommand("congruences", "List every congruence of a .sr file");
  c_cong->add_option("file", cong_file, "semiring file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (c_check->parsed())
      return cmd_check(check);
    if (c_en->parsed())
      return cmd_enumerate(en);
    if (c_ex->parsed())
      return cmd_examples(print_examples);
    if (c_con->parsed())
      return cmd_construct(con);
    if (c_emb->parsed())
      return cmd_embed(embed_file);
    if (c_conj->parsed())
      return cmd_conjectures(conj);
    if (c_cong->parsed())
      return cmd_congruences(cong_file);
  } catch (const InputError &e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const HypothesisError &e) {
    std::cerr << "hypothesis not met: " << e.what() << '\n';
    return kFail;
  } catch (const RefutationError &e) {
    std::cerr << "REFUTATION: " << e.what() << '\n';
    return kFail;
  } catch (const SizeCapError &e) {
    std::cerr << "size cap: " << e.what() << '\n';
    return kFail;
  } catch (const TimeBudgetError &e) {
    std::cerr << e.what() << '\n';
    return kFail;
  } catch (const std::filesystem::filesystem_error &e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  }
  return kInput;
}
