#pragma once

// Linear systems over Z_2 with bit-packed rows.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace postimp::gf2 {

/// One equation: XOR of the unknowns whose coefficient bit is set equals rhs.
class Row {
public:
  Row() = default;
  explicit Row(std::size_t unknowns, bool rhs = false);
  Row(const std::vector<bool>& coefficients, bool rhs);

  std::size_t unknowns() const noexcept { return unknowns_; }
  bool coefficient(std::size_t column) const noexcept { return (words_[column / 64] >> (column % 64)) & 1U; }
  void set(std::size_t column, bool value = true) noexcept;
  bool rhs() const noexcept { return rhs_; }
  void set_rhs(bool value) noexcept { rhs_ = value; }

  bool is_zero() const noexcept;
  /// Lowest set column, or unknowns() when the row is zero.
  std::size_t lowest_column() const noexcept;
  bool satisfied_by(const std::vector<bool>& x) const;

  Row& operator^=(const Row& other) noexcept;

  friend bool operator==(const Row&, const Row&) = default;

private:
  std::size_t unknowns_ = 0;
  std::vector<std::uint64_t> words_;
  bool rhs_ = false;
};

class System {
public:
  explicit System(std::size_t unknowns = 0) : unknowns_(unknowns) {}

  std::size_t unknowns() const noexcept { return unknowns_; }
  const std::vector<Row>& rows() const noexcept { return rows_; }
  std::size_t size() const noexcept { return rows_.size(); }

  /// Throws when the row width differs from unknowns().
  void add(Row row);
  void add(const std::vector<bool>& coefficients, bool rhs) { add(Row(coefficients, rhs)); }

  bool satisfied_by(const std::vector<bool>& x) const;

  friend bool operator==(const System&, const System&) = default;

private:
  std::size_t unknowns_;
  std::vector<Row> rows_;
};

struct Echelon {
  /// Reduced row-echelon form: pivot rows first (in pivot order), zero rows after.
  System system;
  /// pivots[r] is the pivot column of row r, for r < rank.
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  /// True when no zero row has rhs 1.
  bool consistent = true;
};

/// Gauss-Jordan elimination. Columns are scanned left to right and the
/// first row at or below the current one with a set bit becomes the pivot.
Echelon eliminate(const System& system);

bool is_consistent(const System& system);

/// One solution with every free unknown set to 0, or nullopt when inconsistent.
std::optional<std::vector<bool>> solve(const System& system);

} // namespace postimp::gf2
