#pragma once

// B-formulae: trees of base connectives over named variables.

#include "postimp/boolfn.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace postimp {

/// An ordered, non-empty set of connectives with unique names.
class Base {
public:
  explicit Base(std::vector<BooleanFunction> functions);

  std::size_t size() const noexcept { return functions_.size(); }
  const BooleanFunction& operator[](std::size_t i) const { return functions_[i]; }
  std::span<const BooleanFunction> functions() const noexcept { return functions_; }

  std::optional<std::size_t> find(std::string_view name) const;
  const BooleanFunction& at(std::string_view name) const;

private:
  std::vector<BooleanFunction> functions_;
  std::unordered_map<std::string, std::size_t> index_;
};

using BasePtr = std::shared_ptr<const Base>;

BasePtr make_base(std::vector<BooleanFunction> functions);

struct Node {
  enum class Kind { Variable, Apply };

  Kind kind = Kind::Variable;
  /// Variable position for Kind::Variable, function position in the base for Kind::Apply.
  std::size_t index = 0;
  std::vector<Node> children;

  static Node variable(std::size_t position) { return {Kind::Variable, position, {}}; }
  static Node apply(std::size_t function, std::vector<Node> children) {
    return {Kind::Apply, function, std::move(children)};
  }

  bool is_variable() const noexcept { return kind == Kind::Variable; }

  friend bool operator==(const Node&, const Node&) = default;
};

/// Number of nodes in the tree.
std::size_t node_count(const Node& node);
/// Longest root-to-leaf edge count; a single leaf has depth 0.
std::size_t depth(const Node& node);

/// Bijection between variable names and positions 0..n-1, in insertion order.
class VariableTable {
public:
  std::size_t intern(const std::string& name);
  std::optional<std::size_t> find(std::string_view name) const;

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t position) const { return names_.at(position); }
  const std::vector<std::string>& names() const noexcept { return names_; }

private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> positions_;
};

class Formula {
public:
  /// Checks that every application names a base function with the right
  /// number of children and that every variable position is in range.
  Formula(BasePtr base, Node root, std::vector<std::string> variables);

  const Base& base() const noexcept { return *base_; }
  const BasePtr& base_ptr() const noexcept { return base_; }
  const Node& root() const noexcept { return root_; }
  const std::vector<std::string>& variables() const noexcept { return variables_; }
  std::size_t num_variables() const noexcept { return variables_.size(); }

  /// Same tree over a different (wider) variable index.
  Formula with_variables(Node root, std::vector<std::string> variables) const {
    return Formula(base_, std::move(root), std::move(variables));
  }

  friend bool operator==(const Formula& a, const Formula& b) {
    return a.base_ == b.base_ && a.root_ == b.root_ && a.variables_ == b.variables_;
  }

private:
  BasePtr base_;
  Node root_;
  std::vector<std::string> variables_;
};

/// Grammar: formula := VAR | NAME '(' formula (',' formula)* ')' | NAME | NAME '(' ')'
/// A bare NAME (or NAME with empty parentheses) must be a 0-ary connective;
/// VAR is [a-z][a-z0-9_]* and must not be a base name. Throws ParseError.
Formula parse_formula(std::string_view text, BasePtr base);

/// Parses into an existing variable index; new variables are appended.
Node parse_formula(std::string_view text, const Base& base, VariableTable& variables);

/// Canonical text: `name(a, b)`, 0-ary connectives as `name()`.
std::string to_string(const Formula& formula);
std::string to_string(const Node& node, const Base& base, const std::vector<std::string>& variables);

/// `sigma[i]` is the value of variable i; requires `sigma.size() >= num_variables()`.
bool evaluate(const Formula& formula, const std::vector<bool>& sigma);

/// Bit-sliced evaluation: lane k of `block[i]` is variable i under assignment k.
std::uint64_t evaluate_block(const Formula& formula, std::span<const std::uint64_t> block);

/// Postfix program for repeated bit-sliced evaluation of one formula.
class BlockEvaluator {
public:
  explicit BlockEvaluator(const Formula& formula);

  std::uint64_t operator()(std::span<const std::uint64_t> block);

private:
  struct Op {
    bool is_variable;
    std::size_t index;
  };

  BasePtr base_;
  std::vector<Op> program_;
  std::vector<std::uint64_t> stack_;
};

/// Truth table over the formula's variable index; at most 16 variables.
BooleanFunction truth_table(const Formula& formula);

/// Positions (in the base) of the connectives that occur in the formula.
std::vector<std::size_t> used_functions(const Formula& formula);

// Normal-form extraction by evaluation at n+1 points. Each requires every
// connective occurring in the formula to lie in the matching fragment and
// throws FragmentError otherwise.
LinearForm extract_linear_nf(const Formula& formula);
OrForm extract_or_nf(const Formula& formula);
AndForm extract_and_nf(const Formula& formula);
UnaryForm extract_unary_nf(const Formula& formula);

/// An implication question: do the premises entail the conclusion? All
/// formulae share one variable index, assigned by first occurrence
/// (premises left to right, then the conclusion).
class Instance {
public:
  Instance(BasePtr base, std::vector<Formula> premises, Formula conclusion);

  const Base& base() const noexcept { return *base_; }
  const BasePtr& base_ptr() const noexcept { return base_; }
  const std::vector<Formula>& premises() const noexcept { return premises_; }
  const Formula& conclusion() const noexcept { return conclusion_; }
  const std::vector<std::string>& variables() const noexcept { return conclusion_.variables(); }
  std::size_t num_variables() const noexcept { return conclusion_.num_variables(); }

private:
  BasePtr base_;
  std::vector<Formula> premises_;
  Formula conclusion_;
};

Instance parse_instance(BasePtr base, const std::vector<std::string>& premises, std::string_view conclusion);

} // namespace postimp
