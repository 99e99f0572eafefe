#ifndef SFORGE_IO_HPP
#define SFORGE_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "characterize.hpp"
#include "semimodule.hpp"
#include "semiring.hpp"

namespace sforge {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  if (!cur.empty())
    lines.push_back(cur);
  while (!lines.empty() && lines.back().find_first_not_of(" \t") == std::string::npos)
    lines.pop_back();
  return lines;
}

inline std::size_t parse_count(const std::string &line, std::size_t lineno) {
  std::istringstream in(line);
  long long v = 0;
  std::string rest;
  if (!(in >> v) || (in >> rest) || v <= 0 || v > 0xFFFF)
    throw InputError("line " + std::to_string(lineno) + ": expected a positive element count");
  return static_cast<std::size_t>(v);
}

inline std::vector<Elem> parse_row(const std::string &line, std::size_t width, std::size_t bound, std::size_t lineno) {
  std::istringstream in(line);
  std::vector<Elem> row;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (used != tok.size() || tok[0] == '-')
      throw InputError("line " + std::to_string(lineno) + ": '" + tok + "' is not an index");
    if (v >= bound)
      throw InputError("line " + std::to_string(lineno) + ": index " + tok + " out of range");
    row.push_back(static_cast<Elem>(v));
  }
  if (row.size() != width)
    throw InputError("line " + std::to_string(lineno) + ": expected " + std::to_string(width) + " entries, found " +
                     std::to_string(row.size()));
  return row;
}

inline Table parse_square(const std::vector<std::string> &lines, std::size_t first, std::size_t n) {
  std::vector<std::vector<Elem>> rows;
  for (std::size_t i = 0; i < n; ++i)
    rows.push_back(parse_row(lines[first + i], n, n, first + i + 1));
  return Table::from_rows(rows);
}

inline void append_rows(std::string &out, const Table &t) {
  for (std::size_t r = 0; r < t.rows(); ++r) {
    for (std::size_t c = 0; c < t.cols(); ++c) {
      if (c)
        out += ' ';
      out += std::to_string(t(r, c));
    }
    out += '\n';
  }
}

} // namespace detail

inline std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string &path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw InputError("cannot write " + path);
  out << content;
}

// ---------------------------------------------------------------------------
// .sl: n, then n rows of the join table

inline FiniteSemilattice parse_semilattice(std::string_view text) {
  const auto lines = detail::split_lines(text);
  if (lines.empty())
    throw InputError("empty semilattice file");
  const std::size_t n = detail::parse_count(lines[0], 1);
  if (lines.size() != n + 1)
    throw InputError("semilattice file needs " + std::to_string(n + 1) + " lines, found " +
                     std::to_string(lines.size()));
  return FiniteSemilattice(detail::parse_square(lines, 1, n));
}

inline std::string format_semilattice(const FiniteSemilattice &L) {
  std::string out = std::to_string(L.size()) + "\n";
  detail::append_rows(out, L.table());
  return out;
}

// ---------------------------------------------------------------------------
// .sr: n, n rows of +, a line '#', n rows of ·

inline FiniteSemiring parse_semiring(std::string_view text) {
  const auto lines = detail::split_lines(text);
  if (lines.empty())
    throw InputError("empty semiring file");
  const std::size_t n = detail::parse_count(lines[0], 1);
  if (lines.size() != 2 * n + 2)
    throw InputError("semiring file needs " + std::to_string(2 * n + 2) + " lines, found " +
                     std::to_string(lines.size()));
  if (lines[n + 1] != "#")
    throw InputError("line " + std::to_string(n + 2) + ": expected '#'");
  return FiniteSemiring(detail::parse_square(lines, 1, n), detail::parse_square(lines, n + 2, n));
}

inline std::string format_semiring(const FiniteSemiring &R) {
  std::string out = std::to_string(R.size()) + "\n";
  detail::append_rows(out, R.add_table());
  out += "#\n";
  detail::append_rows(out, R.mul_table());
  return out;
}

// ---------------------------------------------------------------------------
// Morphism lists: one image sequence per line

inline std::vector<JoinMorphism> parse_morphisms(std::string_view text, std::size_t n) {
  std::vector<JoinMorphism> maps;
  const auto lines = detail::split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].find_first_not_of(" \t") == std::string::npos)
      continue;
    maps.push_back({detail::parse_row(lines[i], n, n, i + 1)});
  }
  if (maps.empty())
    throw InputError("no morphisms given");
  return maps;
}

inline std::string format_morphisms(const std::vector<JoinMorphism> &maps) {
  std::string out;
  for (const auto &f : maps) {
    for (std::size_t x = 0; x < f.size(); ++x) {
      if (x)
        out += ' ';
      out += std::to_string(f(x));
    }
    out += '\n';
  }
  return out;
}

/// Named semilattices: chain:N, vee:N (N atoms under a top), diamond.
/// Anything else is read as a .sl file.
inline FiniteSemilattice semilattice_from_spec(const std::string &spec) {
  auto count = [&](std::size_t prefix) {
    const std::string num = spec.substr(prefix);
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(num, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (num.empty() || used != num.size() || v == 0 || v > 64)
      throw InputError("bad size in semilattice spec '" + spec + "'");
    return static_cast<std::size_t>(v);
  };
  if (spec.rfind("chain:", 0) == 0)
    return chain(count(6));
  if (spec.rfind("vee:", 0) == 0)
    return antichain_with_top(count(4));
  if (spec == "diamond")
    return diamond();
  return parse_semilattice(read_file(spec));
}

// ---------------------------------------------------------------------------
// JSON

inline ordered_json table_json(const Table &t) { return t.to_rows(); }

inline ordered_json morphisms_json(const std::vector<JoinMorphism> &maps) {
  ordered_json rows = ordered_json::array();
  for (const auto &f : maps)
    rows.push_back(f.image);
  return rows;
}

inline ordered_json semiring_json(const FiniteSemiring &R, const std::vector<std::string> &names = {},
                                  const FiniteSemilattice *L = nullptr,
                                  const std::vector<JoinMorphism> *realization = nullptr) {
  ordered_json j;
  j["size"] = R.size();
  j["add"] = table_json(R.add_table());
  j["mul"] = table_json(R.mul_table());
  if (!names.empty())
    j["names"] = names;
  if (L && realization) {
    ordered_json r;
    r["semilattice"] = format_semilattice(*L);
    r["morphisms"] = morphisms_json(*realization);
    j["realization"] = std::move(r);
  }
  return j;
}

inline FiniteSemiring semiring_from_json(const ordered_json &j) {
  try {
    auto add = j.at("add").get<std::vector<std::vector<Elem>>>();
    auto mul = j.at("mul").get<std::vector<std::vector<Elem>>>();
    FiniteSemiring R(Table::from_rows(add), Table::from_rows(mul));
    if (j.contains("size") && j.at("size").get<std::size_t>() != R.size())
      throw InputError("size field disagrees with the tables");
    return R;
  } catch (const nlohmann::json::exception &e) {
    throw InputError(std::string("malformed semiring JSON: ") + e.what());
  }
}

inline ordered_json semimodule_json(const RSemimodule &M) {
  ordered_json j;
  j["ring"] = semiring_json(M.ring());
  j["module"] = format_semilattice(M.semilattice());
  j["action"] = table_json(M.action_table());
  return j;
}

inline ordered_json conditions_json(const ConditionReport &rep) {
  ordered_json j = ordered_json::object();
  for (int c = 1; c <= 8; ++c) {
    if (!rep.evaluated(c))
      continue;
    const auto &r = *rep.result[static_cast<std::size_t>(c)];
    ordered_json e;
    e["holds"] = r.holds;
    if (!r.holds)
      e["witness"] = r.witness;
    j[std::to_string(c)] = std::move(e);
  }
  return j;
}

inline ordered_json verdict_json(const RoundTrip &rt) {
  ordered_json j;
  j["case"] = std::string(to_string(rt.tag));
  j["conditions"] = conditions_json(rt.conditions);
  j["semilattice"] = rt.L ? ordered_json(format_semilattice(*rt.L)) : ordered_json();
  j["realization"] = morphisms_json(rt.realization);
  j["verdict"] = rt.verdict;
  j["witnesses"] = rt.witnesses;
  return j;
}

} // namespace sforge

#endif // SFORGE_IO_HPP
