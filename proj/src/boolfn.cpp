#include "postimp/boolfn.hpp"

#include "postimp/error.hpp"

#include <array>
#include <bit>

namespace postimp {

namespace {

std::uint64_t tail_mask(unsigned arity) {
  return arity >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (std::size_t{1} << arity)) - 1;
}

std::uint64_t unit(unsigned i) { return std::uint64_t{1} << i; }

} // namespace

BooleanFunction::BooleanFunction() : words_(1, 0) {}

BooleanFunction::BooleanFunction(std::string name, unsigned arity, std::vector<std::uint64_t> words)
    : name_(std::move(name)), arity_(arity), words_(std::move(words)) {
  if (arity_ > max_arity)
    throw Error("arity " + std::to_string(arity_) + " exceeds the maximum of " + std::to_string(max_arity));
  if (words_.size() != word_count(arity_))
    throw Error("truth table of '" + name_ + "' has " + std::to_string(words_.size()) + " words, expected " +
                std::to_string(word_count(arity_)));
  words_.back() &= tail_mask(arity_);
}

BooleanFunction BooleanFunction::from_bits(std::string name, std::string_view bits) {
  if (bits.empty() || !std::has_single_bit(bits.size()))
    throw Error("truth table length " + std::to_string(bits.size()) + " is not a power of two");
  return from_bits(std::move(name), static_cast<unsigned>(std::countr_zero(bits.size())), bits);
}

BooleanFunction BooleanFunction::from_bits(std::string name, unsigned arity, std::string_view bits) {
  if (arity > max_arity)
    throw Error("arity " + std::to_string(arity) + " exceeds the maximum of " + std::to_string(max_arity));
  const std::size_t rows = std::size_t{1} << arity;
  if (bits.size() != rows)
    throw Error("truth table of '" + name + "' has length " + std::to_string(bits.size()) + ", expected " +
                std::to_string(rows) + " for arity " + std::to_string(arity));
  std::vector<std::uint64_t> words(word_count(arity), 0);
  for (std::size_t j = 0; j < rows; ++j) {
    if (bits[j] == '1')
      words[j / 64] |= std::uint64_t{1} << (j % 64);
    else if (bits[j] != '0')
      throw Error("truth table of '" + name + "' contains '" + std::string(1, bits[j]) + "' at position " +
                  std::to_string(j));
  }
  return BooleanFunction(std::move(name), arity, std::move(words));
}

std::string BooleanFunction::bits() const {
  std::string out(rows(), '0');
  for (std::size_t j = 0; j < rows(); ++j)
    if (at(j))
      out[j] = '1';
  return out;
}

BooleanFunction BooleanFunction::renamed(std::string name) const {
  BooleanFunction copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

std::uint64_t row_index(const std::vector<bool>& args) {
  std::uint64_t row = 0;
  for (std::size_t i = 0; i < args.size(); ++i)
    if (args[i])
      row |= std::uint64_t{1} << i;
  return row;
}

bool evaluate(const BooleanFunction& f, const std::vector<bool>& args) {
  if (args.size() != f.arity())
    throw ArityError("evaluating '" + f.name() + "'", f.arity(), args.size());
  return f.at(row_index(args));
}

std::uint64_t apply_lanes(const BooleanFunction& f, std::span<const std::uint64_t> args) {
  const unsigned n = f.arity();
  if (args.size() != n)
    throw ArityError("applying '" + f.name() + "'", n, args.size());
  if (n == 0)
    return f.at(0) ? ~std::uint64_t{0} : 0;

  // Shannon expansion, folding the highest variable first.
  std::array<std::uint64_t, 256> small;
  std::vector<std::uint64_t> large;
  std::uint64_t* values = small.data();
  if (n > 8) {
    large.resize(f.rows());
    values = large.data();
  }
  for (std::size_t j = 0; j < f.rows(); ++j)
    values[j] = f.at(j) ? ~std::uint64_t{0} : 0;
  for (unsigned i = n; i-- > 0;) {
    const std::size_t half = std::size_t{1} << i;
    const std::uint64_t x = args[i];
    for (std::size_t j = 0; j < half; ++j)
      values[j] = (x & values[j + half]) | (~x & values[j]);
  }
  return values[0];
}

bool is_reproducing(const BooleanFunction& f, bool c) {
  return f.at(c ? f.rows() - 1 : 0) == c;
}

bool is_monotone(const BooleanFunction& f) {
  for (std::size_t j = 0; j < f.rows(); ++j) {
    if (!f.at(j))
      continue;
    // f(j) = 1 must never drop to 0 when an input rises.
    for (unsigned i = 0; i < f.arity(); ++i)
      if (!(j & unit(i)) && !f.at(j | unit(i)))
        return false;
  }
  return true;
}

bool is_self_dual(const BooleanFunction& f) {
  const std::size_t mask = f.rows() - 1;
  for (std::size_t j = 0; j < f.rows(); ++j)
    if (f.at(j) == f.at(~j & mask))
      return false;
  return true;
}

BooleanFunction dual(const BooleanFunction& f) {
  const std::size_t mask = f.rows() - 1;
  return BooleanFunction::tabulate(f.name(), f.arity(), [&](std::uint64_t j) { return !f.at(~j & mask); });
}

bool is_separating(const BooleanFunction& f, bool c) {
  for (unsigned i = 0; i < f.arity(); ++i) {
    bool witness = true;
    for (std::size_t j = 0; j < f.rows() && witness; ++j)
      if (f.at(j) == c && static_cast<bool>(j & unit(i)) != c)
        witness = false;
    if (witness)
      return true;
  }
  return false;
}

bool depends_on(const BooleanFunction& f, unsigned variable) {
  if (variable >= f.arity())
    return false;
  for (std::size_t j = 0; j < f.rows(); ++j)
    if (!(j & unit(variable)) && f.at(j) != f.at(j | unit(variable)))
      return true;
  return false;
}

std::vector<unsigned> relevant_variables(const BooleanFunction& f) {
  std::vector<unsigned> out;
  for (unsigned i = 0; i < f.arity(); ++i)
    if (depends_on(f, i))
      out.push_back(i);
  return out;
}

namespace {

std::vector<bool> unpack(std::uint64_t mask, unsigned n) {
  std::vector<bool> out(n);
  for (unsigned i = 0; i < n; ++i)
    out[i] = (mask >> i) & 1U;
  return out;
}

template <class Reconstruct>
bool matches(const BooleanFunction& f, Reconstruct&& g) {
  for (std::size_t j = 0; j < f.rows(); ++j)
    if (f.at(j) != g(static_cast<std::uint64_t>(j)))
      return false;
  return true;
}

} // namespace

std::optional<LinearForm> as_linear(const BooleanFunction& f) {
  const bool c0 = f.at(0);
  std::uint64_t coeffs = 0;
  for (unsigned i = 0; i < f.arity(); ++i)
    if (f.at(unit(i)) != c0)
      coeffs |= unit(i);
  if (!matches(f, [&](std::uint64_t j) { return c0 != static_cast<bool>(std::popcount(j & coeffs) & 1); }))
    return std::nullopt;
  return LinearForm{c0, unpack(coeffs, f.arity())};
}

std::optional<OrForm> as_disjunction(const BooleanFunction& f) {
  const bool c0 = f.at(0);
  std::uint64_t coeffs = 0;
  for (unsigned i = 0; i < f.arity(); ++i)
    if (c0 || f.at(unit(i)))
      coeffs |= unit(i);
  if (!matches(f, [&](std::uint64_t j) { return c0 || (j & coeffs) != 0; }))
    return std::nullopt;
  return OrForm{c0, unpack(coeffs, f.arity())};
}

std::optional<AndForm> as_conjunction(const BooleanFunction& f) {
  const std::uint64_t full = f.rows() - 1;
  const bool c0 = f.at(full);
  std::uint64_t coeffs = 0;
  for (unsigned i = 0; i < f.arity(); ++i)
    if (!c0 || !f.at(full ^ unit(i)))
      coeffs |= unit(i);
  if (!matches(f, [&](std::uint64_t j) { return c0 && (j & coeffs) == coeffs; }))
    return std::nullopt;
  return AndForm{c0, unpack(coeffs, f.arity())};
}

std::optional<UnaryForm> as_unary(const BooleanFunction& f) {
  const auto relevant = relevant_variables(f);
  if (relevant.empty())
    return UnaryForm::constant(f.at(0));
  if (relevant.size() > 1)
    return std::nullopt;
  return UnaryForm::literal(relevant.front(), f.at(unit(relevant.front())));
}

bool evaluate(const LinearForm& form, const std::vector<bool>& x) {
  bool v = form.constant;
  for (std::size_t i = 0; i < form.coefficients.size(); ++i)
    v ^= form.coefficients[i] && x.at(i);
  return v;
}

bool evaluate(const OrForm& form, const std::vector<bool>& x) {
  bool v = form.constant;
  for (std::size_t i = 0; i < form.coefficients.size() && !v; ++i)
    v = form.coefficients[i] && x.at(i);
  return v;
}

bool evaluate(const AndForm& form, const std::vector<bool>& x) {
  bool v = form.constant;
  for (std::size_t i = 0; i < form.coefficients.size() && v; ++i)
    v = !form.coefficients[i] || x.at(i);
  return v;
}

bool evaluate(const UnaryForm& form, const std::vector<bool>& x) {
  if (form.is_constant())
    return form.value;
  return x.at(form.variable) == form.value;
}

namespace connectives {

BooleanFunction bot() { return BooleanFunction::from_bits("bot", "0"); }
BooleanFunction top() { return BooleanFunction::from_bits("top", "1"); }
BooleanFunction identity() { return BooleanFunction::from_bits("id", "01"); }
BooleanFunction negation() { return BooleanFunction::from_bits("not", "10"); }
BooleanFunction conjunction() { return BooleanFunction::from_bits("and", "0001"); }
BooleanFunction disjunction() { return BooleanFunction::from_bits("or", "0111"); }
BooleanFunction exclusive_or() { return BooleanFunction::from_bits("xor", "0110"); }
BooleanFunction xor3() { return BooleanFunction::from_bits("xor3", "01101001"); }
BooleanFunction majority() { return BooleanFunction::from_bits("maj", "00010111"); }
BooleanFunction or_and() { return BooleanFunction::from_bits("orand", "01010111"); }
BooleanFunction and_or() { return BooleanFunction::from_bits("andor", "00010101"); }

} // namespace connectives

} // namespace postimp
