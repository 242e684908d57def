#pragma once

// Finite Boolean functions as bit-packed truth tables, the closure
// properties that carve out the clones of Post's lattice, and the
// normal forms of the linear, disjunctive, conjunctive and unary clones.
//
// Row j of a table of arity n holds f(a_0, ..., a_{n-1}) with
// a_i = (j >> i) & 1, i.e. variable 0 is the least-significant index bit.
// Variables are indexed from 0 throughout the library.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace postimp {

inline constexpr unsigned max_arity = 16;

class BooleanFunction {
public:
  /// The 0-ary constant false, unnamed.
  BooleanFunction();

  /// `words` holds 2^arity bits, least-significant bit first; surplus bits
  /// in the last word are cleared.
  BooleanFunction(std::string name, unsigned arity, std::vector<std::uint64_t> words);

  /// Table given as a string over {0,1}; character j is row j. The arity is
  /// inferred from the length, which must be a power of two.
  static BooleanFunction from_bits(std::string name, std::string_view bits);
  static BooleanFunction from_bits(std::string name, unsigned arity, std::string_view bits);

  /// Builds the table by calling `pred(row)` for every row index.
  template <class Pred>
  static BooleanFunction tabulate(std::string name, unsigned arity, Pred&& pred) {
    std::vector<std::uint64_t> words(word_count(arity), 0);
    const std::size_t rows = std::size_t{1} << arity;
    for (std::size_t j = 0; j < rows; ++j)
      if (pred(static_cast<std::uint64_t>(j)))
        words[j / 64] |= std::uint64_t{1} << (j % 64);
    return BooleanFunction(std::move(name), arity, std::move(words));
  }

  const std::string& name() const noexcept { return name_; }
  unsigned arity() const noexcept { return arity_; }
  std::size_t rows() const noexcept { return std::size_t{1} << arity_; }

  bool at(std::size_t row) const noexcept { return (words_[row / 64] >> (row % 64)) & 1U; }
  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::string bits() const;

  BooleanFunction renamed(std::string name) const;

  /// Tables are compared; names are not.
  friend bool operator==(const BooleanFunction& a, const BooleanFunction& b) noexcept {
    return a.arity_ == b.arity_ && a.words_ == b.words_;
  }

  static std::size_t word_count(unsigned arity) noexcept {
    return arity <= 6 ? 1 : (std::size_t{1} << (arity - 6));
  }

private:
  std::string name_;
  unsigned arity_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Row index encoded by an argument vector (argument 0 least significant).
std::uint64_t row_index(const std::vector<bool>& args);

/// Throws ArityError when `args.size() != f.arity()`.
bool evaluate(const BooleanFunction& f, const std::vector<bool>& args);

/// Applies f lane-wise: bit k of the result is f applied to bit k of each
/// argument word. `args.size()` must equal the arity.
std::uint64_t apply_lanes(const BooleanFunction& f, std::span<const std::uint64_t> args);

bool is_reproducing(const BooleanFunction& f, bool c);
bool is_monotone(const BooleanFunction& f);
bool is_self_dual(const BooleanFunction& f);
bool is_separating(const BooleanFunction& f, bool c);

/// dual(f)(x) = not f(not x).
BooleanFunction dual(const BooleanFunction& f);

bool depends_on(const BooleanFunction& f, unsigned variable);
std::vector<unsigned> relevant_variables(const BooleanFunction& f);

// Normal forms. Each carries a constant term and one coefficient per
// variable position.

/// c0 xor (xor of c_i x_i)
struct LinearForm {
  bool constant = false;
  std::vector<bool> coefficients;
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// c0 or (or of c_i x_i)
struct OrForm {
  bool constant = false;
  std::vector<bool> coefficients;
  friend bool operator==(const OrForm&, const OrForm&) = default;
};

/// c0 and (and of x_i over c_i = 1). A coefficient of 0 means the variable
/// is absent from the conjunction.
struct AndForm {
  bool constant = true;
  std::vector<bool> coefficients;
  friend bool operator==(const AndForm&, const AndForm&) = default;
};

/// A constant or a single literal.
struct UnaryForm {
  enum class Kind { Constant, Literal };

  Kind kind = Kind::Constant;
  /// The constant for Kind::Constant, the polarity (true = positive) for Kind::Literal.
  bool value = false;
  std::size_t variable = 0;

  static UnaryForm constant(bool value) { return {Kind::Constant, value, 0}; }
  static UnaryForm literal(std::size_t variable, bool positive) { return {Kind::Literal, positive, variable}; }

  bool is_constant() const noexcept { return kind == Kind::Constant; }
  UnaryForm negated() const noexcept { return {kind, !value, variable}; }

  friend bool operator==(const UnaryForm&, const UnaryForm&) = default;
};

bool evaluate(const LinearForm& form, const std::vector<bool>& x);
bool evaluate(const OrForm& form, const std::vector<bool>& x);
bool evaluate(const AndForm& form, const std::vector<bool>& x);
bool evaluate(const UnaryForm& form, const std::vector<bool>& x);

/// Truth table of a normal form over `arity` variables.
template <class Form>
BooleanFunction to_function(const Form& form, unsigned arity) {
  std::vector<bool> x(arity);
  return BooleanFunction::tabulate({}, arity, [&](std::uint64_t row) {
    for (unsigned i = 0; i < arity; ++i)
      x[i] = (row >> i) & 1U;
    return evaluate(form, x);
  });
}

// Candidate coefficients are read off the all-zero (all-one for AndForm)
// row and the unit (co-unit) rows, then checked against the whole table.
std::optional<LinearForm> as_linear(const BooleanFunction& f);
std::optional<OrForm> as_disjunction(const BooleanFunction& f);
std::optional<AndForm> as_conjunction(const BooleanFunction& f);
std::optional<UnaryForm> as_unary(const BooleanFunction& f);

inline bool is_linear(const BooleanFunction& f) { return as_linear(f).has_value(); }

/// The connectives used by the canonical clone bases.
namespace connectives {
BooleanFunction bot();          // 0
BooleanFunction top();          // 1
BooleanFunction identity();     // x
BooleanFunction negation();     // not x
BooleanFunction conjunction();  // x and y
BooleanFunction disjunction();  // x or y
BooleanFunction exclusive_or(); // x xor y
BooleanFunction xor3();         // x xor y xor z
BooleanFunction majority();     // (x and y) or (y and z) or (x and z)
BooleanFunction or_and();       // x or (y and z)
BooleanFunction and_or();       // x and (y or z)
} // namespace connectives

} // namespace postimp
