#include "postimp/gf2.hpp"

#include "postimp/error.hpp"

#include <bit>
#include <utility>

namespace postimp::gf2 {

Row::Row(std::size_t unknowns, bool rhs) : unknowns_(unknowns), words_((unknowns + 63) / 64, 0), rhs_(rhs) {}

Row::Row(const std::vector<bool>& coefficients, bool rhs) : Row(coefficients.size(), rhs) {
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    if (coefficients[i])
      set(i);
}

void Row::set(std::size_t column, bool value) noexcept {
  const std::uint64_t bit = std::uint64_t{1} << (column % 64);
  if (value)
    words_[column / 64] |= bit;
  else
    words_[column / 64] &= ~bit;
}

bool Row::is_zero() const noexcept {
  for (auto w : words_)
    if (w)
      return false;
  return true;
}

std::size_t Row::lowest_column() const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i])
      return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
  return unknowns_;
}

bool Row::satisfied_by(const std::vector<bool>& x) const {
  bool sum = false;
  for (std::size_t i = 0; i < unknowns_; ++i)
    if (coefficient(i) && x.at(i))
      sum = !sum;
  return sum == rhs_;
}

Row& Row::operator^=(const Row& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] ^= other.words_[i];
  rhs_ ^= other.rhs_;
  return *this;
}

void System::add(Row row) {
  if (row.unknowns() != unknowns_)
    throw ArityError("adding a row to a linear system", unknowns_, row.unknowns());
  rows_.push_back(std::move(row));
}

bool System::satisfied_by(const std::vector<bool>& x) const {
  for (const auto& r : rows_)
    if (!r.satisfied_by(x))
      return false;
  return true;
}

Echelon eliminate(const System& system) {
  std::vector<Row> rows = system.rows();
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t col = 0; col < system.unknowns() && next < rows.size(); ++col) {
    std::size_t p = next;
    while (p < rows.size() && !rows[p].coefficient(col))
      ++p;
    if (p == rows.size())
      continue;
    std::swap(rows[next], rows[p]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != next && rows[r].coefficient(col))
        rows[r] ^= rows[next];
    pivots.push_back(col);
    ++next;
  }

  Echelon out{System(system.unknowns()), std::move(pivots), next, true};
  for (auto& r : rows) {
    if (r.is_zero() && r.rhs())
      out.consistent = false;
    out.system.add(std::move(r));
  }
  return out;
}

bool is_consistent(const System& system) { return eliminate(system).consistent; }

std::optional<std::vector<bool>> solve(const System& system) {
  const Echelon e = eliminate(system);
  if (!e.consistent)
    return std::nullopt;
  // Reduced form: with free unknowns at 0 each pivot equals its row's rhs.
  std::vector<bool> x(system.unknowns(), false);
  for (std::size_t r = 0; r < e.rank; ++r)
    x[e.pivots[r]] = e.system.rows()[r].rhs();
  return x;
}

} // namespace postimp::gf2
