#ifndef SFORGE_WORKED_EXAMPLES_HPP
#define SFORGE_WORKED_EXAMPLES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "characterize.hpp"
#include "golden.hpp"

namespace sforge {

inline std::string element_name(std::size_t i) {
  if (i >= 26)
    throw InputError("example tables name at most 26 elements");
  return std::string(1, static_cast<char>('a' + i));
}

/// Map table: header row "x | 0 1 ..", then one row per map named a, b, ...
inline std::string render_maps(const std::vector<JoinMorphism> &maps) {
  const std::size_t n = maps.empty() ? 0 : maps.front().size();
  std::string out = "x |";
  for (std::size_t x = 0; x < n; ++x)
    out += " " + std::to_string(x);
  out += "\n--+" + std::string(2 * n, '-') + "\n";
  for (std::size_t i = 0; i < maps.size(); ++i) {
    out += element_name(i) + " |";
    for (Elem v : maps[i].image)
      out += " " + std::to_string(v);
    out += "\n";
  }
  return out;
}

/// Operation table with elements named a, b, ... and symbol v or o.
inline std::string render_operation(char symbol, const Table &t) {
  const std::size_t n = t.rows();
  std::string out(1, symbol);
  out += " |";
  for (std::size_t c = 0; c < n; ++c)
    out += " " + element_name(c);
  out += "\n--+" + std::string(2 * n, '-') + "\n";
  for (std::size_t r = 0; r < n; ++r) {
    out += element_name(r) + " |";
    for (std::size_t c = 0; c < n; ++c)
      out += " " + element_name(t(r, c));
    out += "\n";
  }
  return out;
}

namespace detail {

inline std::string example_block(const std::string &title, const MorphismSemiring &ms, bool tables) {
  std::string out = "== " + title + " ==\n" + render_maps(ms.maps) + "\n";
  if (tables)
    out += render_operation('v', ms.ring.add_table()) + "\n" + render_operation('o', ms.ring.mul_table()) + "\n";
  return out;
}

} // namespace detail

/// Rebuilds every example family from its semilattice and prints it in the
/// golden layout. Families with several members of one size are numbered
/// R<size>,<k>. Of the 4-chain family only the first member gets operation
/// tables, as in the transcription.
inline std::string regenerate_examples() {
  std::string out;
  {
    const auto v = induced_semirings(chain(3), CaseTag::RightNotLeft);
    if (v.size() != 1)
      throw RefutationError("right-not-left on the 3-chain should be unique", std::to_string(v.size()));
    out += detail::example_block("right-not-left chain3", v[0], true);
  }
  {
    const auto v = induced_semirings(chain(4), CaseTag::RightNotLeft);
    for (std::size_t i = 0; i < v.size(); ++i) {
      const std::size_t size = v[i].maps.size();
      std::size_t same = 0, rank = 0;
      for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j].maps.size() == size) {
          ++same;
          if (j <= i)
            ++rank;
        }
      std::string name = "R" + std::to_string(size);
      if (same > 1)
        name += "," + std::to_string(rank);
      out += detail::example_block("right-not-left chain4 " + name, v[i], i == 0);
    }
  }
  {
    const auto v = induced_semirings(chain(2), CaseTag::LeftNotRight);
    if (v.size() != 1)
      throw RefutationError("left-not-right on the 2-chain should be unique", std::to_string(v.size()));
    out += detail::example_block("left-not-right chain2", v[0], true);
  }
  for (const auto &ms : induced_semirings(chain(3), CaseTag::AbsorbingStar))
    out += detail::example_block("absorbing chain3 size" + std::to_string(ms.maps.size()), ms, true);
  return out;
}

struct GoldenMismatch {
  std::size_t line = 0;
  std::size_t column = 0;
  std::string expected;
  std::string actual;
};

/// First differing position (1-based line and column) with both lines.
inline std::optional<GoldenMismatch> compare_golden(std::string_view expected, std::string_view actual) {
  if (expected == actual)
    return std::nullopt;
  std::size_t line = 1, col = 1, i = 0, line_start = 0;
  while (i < expected.size() && i < actual.size() && expected[i] == actual[i]) {
    if (expected[i] == '\n') {
      ++line;
      col = 1;
      line_start = i + 1;
    } else {
      ++col;
    }
    ++i;
  }
  auto line_at = [&](std::string_view s) {
    if (line_start >= s.size())
      return std::string("<end of text>");
    const auto end = s.find('\n', line_start);
    return std::string(s.substr(line_start, end == std::string_view::npos ? s.npos : end - line_start));
  };
  return GoldenMismatch{line, col, line_at(expected), line_at(actual)};
}

} // namespace sforge

#endif // SFORGE_WORKED_EXAMPLES_HPP
