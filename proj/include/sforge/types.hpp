#ifndef SFORGE_TYPES_HPP
#define SFORGE_TYPES_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sforge {

/// Carrier element. Carriers are always 0..n-1.
using Elem = std::uint16_t;

/// Raised when an input does not satisfy the structural requirements of the
/// operation (bad table, index out of range, non-lattice where a lattice is
/// needed, ...).
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when the hypotheses of a theorem-backed operation are not met.
class HypothesisError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A guaranteed witness is missing although its hypotheses were verified.
/// Either the implementation is wrong or a proved statement is refuted.
class RefutationError : public std::logic_error {
public:
  RefutationError(const std::string &what, std::string counterexample)
      : std::logic_error(what), counterexample_(std::move(counterexample)) {}
  const std::string &counterexample() const { return counterexample_; }

private:
  std::string counterexample_;
};

/// Raised when a closure computation exceeds its configured size cap.
class SizeCapError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Dense row-major rows x cols table of carrier elements.
class Table {
public:
  Table() = default;
  Table(std::size_t rows, std::size_t cols, Elem fill = 0)
      : rows_(rows), cols_(cols), cells_(rows * cols, fill) {}
  Table(std::size_t rows, std::size_t cols, std::vector<Elem> cells)
      : rows_(rows), cols_(cols), cells_(std::move(cells)) {
    if (cells_.size() != rows_ * cols_)
      throw InputError("table cell count does not match its shape");
  }

  static Table square(std::size_t n, Elem fill = 0) { return Table(n, n, fill); }

  static Table from_rows(const std::vector<std::vector<Elem>> &rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Table t(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c)
        throw InputError("ragged table rows");
      for (std::size_t j = 0; j < c; ++j)
        t(i, j) = rows[i][j];
    }
    return t;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem operator()(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }
  Elem &operator()(std::size_t i, std::size_t j) { return cells_[i * cols_ + j]; }

  std::vector<Elem> row(std::size_t i) const {
    return {cells_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            cells_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }
  std::vector<std::vector<Elem>> to_rows() const {
    std::vector<std::vector<Elem>> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      out.push_back(row(i));
    return out;
  }

  const std::vector<Elem> &cells() const { return cells_; }

  /// Largest entry must stay below `bound`.
  bool entries_below(std::size_t bound) const {
    for (Elem e : cells_)
      if (e >= bound)
        return false;
    return true;
  }

  auto operator<=>(const Table &) const = default;
  bool operator==(const Table &) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> cells_;
};

/// Relabel a square operation table along a carrier permutation:
/// result(perm[i], perm[j]) = perm[t(i, j)].
inline Table relabel(const Table &t, const std::vector<Elem> &perm) {
  const std::size_t n = t.rows();
  Table out = Table::square(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out(perm[i], perm[j]) = perm[t(i, j)];
  return out;
}

inline std::vector<Elem> invert_permutation(const std::vector<Elem> &perm) {
  std::vector<Elem> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i)
    inv[perm[i]] = static_cast<Elem>(i);
  return inv;
}

inline std::vector<Elem> identity_permutation(std::size_t n) {
  std::vector<Elem> p(n);
  for (std::size_t i = 0; i < n; ++i)
    p[i] = static_cast<Elem>(i);
  return p;
}

} // namespace sforge

#endif // SFORGE_TYPES_HPP
