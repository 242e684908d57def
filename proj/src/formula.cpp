#include "postimp/formula.hpp"

#include "postimp/error.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace postimp {

// ---------------------------------------------------------------- Base

Base::Base(std::vector<BooleanFunction> functions) : functions_(std::move(functions)) {
  if (functions_.empty())
    throw Error("a base needs at least one function");
  for (std::size_t i = 0; i < functions_.size(); ++i) {
    const auto& name = functions_[i].name();
    if (name.empty())
      throw Error("base function #" + std::to_string(i + 1) + " has no name");
    if (!index_.emplace(name, i).second)
      throw Error("duplicate function name '" + name + "' in base");
  }
}

std::optional<std::size_t> Base::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

const BooleanFunction& Base::at(std::string_view name) const {
  auto i = find(name);
  if (!i)
    throw Error("base has no function named '" + std::string(name) + "'");
  return functions_[*i];
}

BasePtr make_base(std::vector<BooleanFunction> functions) {
  return std::make_shared<const Base>(std::move(functions));
}

// ---------------------------------------------------------------- Node

std::size_t node_count(const Node& node) {
  std::size_t n = 1;
  for (const auto& c : node.children)
    n += node_count(c);
  return n;
}

std::size_t depth(const Node& node) {
  std::size_t d = 0;
  for (const auto& c : node.children)
    d = std::max(d, depth(c) + 1);
  return d;
}

std::size_t VariableTable::intern(const std::string& name) {
  auto [it, inserted] = positions_.emplace(name, names_.size());
  if (inserted)
    names_.push_back(name);
  return it->second;
}

std::optional<std::size_t> VariableTable::find(std::string_view name) const {
  auto it = positions_.find(std::string(name));
  if (it == positions_.end())
    return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------- Formula

namespace {

void validate(const Node& node, const Base& base, std::size_t num_variables) {
  if (node.is_variable()) {
    if (node.index >= num_variables)
      throw Error("variable position " + std::to_string(node.index) + " out of range (" +
                  std::to_string(num_variables) + " variables)");
    if (!node.children.empty())
      throw Error("variable node with children");
    return;
  }
  if (node.index >= base.size())
    throw Error("function position " + std::to_string(node.index) + " out of range");
  const auto& f = base[node.index];
  if (node.children.size() != f.arity())
    throw ArityError("application of '" + f.name() + "'", f.arity(), node.children.size());
  for (const auto& c : node.children)
    validate(c, base, num_variables);
}

} // namespace

Formula::Formula(BasePtr base, Node root, std::vector<std::string> variables)
    : base_(std::move(base)), root_(std::move(root)), variables_(std::move(variables)) {
  if (!base_)
    throw Error("formula without a base");
  validate(root_, *base_, variables_.size());
}

// ---------------------------------------------------------------- parser

namespace {

bool is_variable_name(std::string_view s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0])))
    return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::islower(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) || c == '_';
  });
}

class FormulaParser {
public:
  FormulaParser(std::string_view text, const Base& base, VariableTable& variables)
      : text_(text), base_(base), variables_(variables) {}

  Node parse() {
    skip_space();
    if (pos_ == text_.size())
      fail("empty formula", {});
    Node root = parse_term();
    skip_space();
    if (pos_ != text_.size())
      fail("unexpected trailing input", std::string(1, text_[pos_]));
    return root;
  }

private:
  [[noreturn]] void fail(const std::string& message, std::string token, std::size_t at) const {
    throw ParseError(message, {}, 0, at + 1, std::move(token));
  }
  [[noreturn]] void fail(const std::string& message, std::string token) const { fail(message, std::move(token), pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) {
      if (pos_ == text_.size())
        fail(std::string("expected '") + c + "' but input ended", {});
      fail(std::string("expected '") + c + "'", std::string(1, text_[pos_]));
    }
    ++pos_;
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) {
      if (pos_ == text_.size())
        fail("expected a symbol but input ended", {});
      fail("expected a symbol", std::string(1, text_[pos_]));
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  Node parse_term() {
    skip_space();
    const std::size_t start = pos_;
    const std::string name = identifier();
    const auto function = base_.find(name);
    const bool has_args = peek('(');

    if (!function) {
      if (has_args)
        fail("unknown symbol", name, start);
      if (!is_variable_name(name))
        fail("unknown symbol", name, start);
      return Node::variable(variables_.intern(name));
    }

    const auto& f = base_[*function];
    std::vector<Node> children;
    if (has_args) {
      expect('(');
      if (!peek(')')) {
        children.push_back(parse_term());
        while (peek(',')) {
          ++pos_;
          children.push_back(parse_term());
        }
      }
      expect(')');
    }
    if (children.size() != f.arity())
      fail("arity mismatch: '" + name + "' expects " + std::to_string(f.arity()) + " argument(s), got " +
               std::to_string(children.size()),
           name, start);
    return Node::apply(*function, std::move(children));
  }

  std::string_view text_;
  const Base& base_;
  VariableTable& variables_;
  std::size_t pos_ = 0;
};

} // namespace

Node parse_formula(std::string_view text, const Base& base, VariableTable& variables) {
  return FormulaParser(text, base, variables).parse();
}

Formula parse_formula(std::string_view text, BasePtr base) {
  if (!base)
    throw Error("parse_formula without a base");
  VariableTable vars;
  Node root = parse_formula(text, *base, vars);
  return Formula(std::move(base), std::move(root), vars.names());
}

// ---------------------------------------------------------------- printing

namespace {

void print(const Node& node, const Base& base, const std::vector<std::string>& variables, std::string& out) {
  if (node.is_variable()) {
    out += variables.at(node.index);
    return;
  }
  out += base[node.index].name();
  out += '(';
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    if (i > 0)
      out += ", ";
    print(node.children[i], base, variables, out);
  }
  out += ')';
}

} // namespace

std::string to_string(const Node& node, const Base& base, const std::vector<std::string>& variables) {
  std::string out;
  print(node, base, variables, out);
  return out;
}

std::string to_string(const Formula& formula) {
  return to_string(formula.root(), formula.base(), formula.variables());
}

// ---------------------------------------------------------------- evaluation

namespace {

bool eval_node(const Node& node, const Base& base, const std::vector<bool>& sigma) {
  if (node.is_variable())
    return sigma[node.index];
  const auto& f = base[node.index];
  std::uint64_t row = 0;
  for (std::size_t i = 0; i < node.children.size(); ++i)
    if (eval_node(node.children[i], base, sigma))
      row |= std::uint64_t{1} << i;
  return f.at(row);
}

void compile(const Node& node, std::vector<std::pair<bool, std::size_t>>& out) {
  for (const auto& c : node.children)
    compile(c, out);
  out.emplace_back(node.is_variable(), node.index);
}

} // namespace

bool evaluate(const Formula& formula, const std::vector<bool>& sigma) {
  if (sigma.size() < formula.num_variables())
    throw ArityError("evaluating formula", formula.num_variables(), sigma.size());
  return eval_node(formula.root(), formula.base(), sigma);
}

BlockEvaluator::BlockEvaluator(const Formula& formula) : base_(formula.base_ptr()) {
  std::vector<std::pair<bool, std::size_t>> ops;
  compile(formula.root(), ops);
  program_.reserve(ops.size());
  for (auto [is_var, index] : ops)
    program_.push_back({is_var, index});
  stack_.reserve(ops.size());
}

std::uint64_t BlockEvaluator::operator()(std::span<const std::uint64_t> block) {
  stack_.clear();
  for (const Op& op : program_) {
    if (op.is_variable) {
      stack_.push_back(block[op.index]);
      continue;
    }
    const auto& f = (*base_)[op.index];
    const std::size_t n = f.arity();
    const std::uint64_t r = apply_lanes(f, std::span<const std::uint64_t>(stack_.data() + stack_.size() - n, n));
    stack_.resize(stack_.size() - n);
    stack_.push_back(r);
  }
  return stack_.back();
}

std::uint64_t evaluate_block(const Formula& formula, std::span<const std::uint64_t> block) {
  if (block.size() < formula.num_variables())
    throw ArityError("block evaluation", formula.num_variables(), block.size());
  return BlockEvaluator(formula)(block);
}

BooleanFunction truth_table(const Formula& formula) {
  const std::size_t n = formula.num_variables();
  if (n > max_arity)
    throw Error("truth table of a formula with " + std::to_string(n) + " variables (at most " +
                std::to_string(max_arity) + " supported)");
  const auto arity = static_cast<unsigned>(n);
  BlockEvaluator eval(formula);
  std::vector<std::uint64_t> words(BooleanFunction::word_count(arity));
  std::vector<std::uint64_t> block(n);
  for (std::size_t w = 0; w < words.size(); ++w) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i < 6) {
        // Lane k holds row 64w + k; bit i of k repeats with period 2^(i+1).
        std::uint64_t pattern = 0;
        for (unsigned k = 0; k < 64; ++k)
          if ((k >> i) & 1U)
            pattern |= std::uint64_t{1} << k;
        block[i] = pattern;
      } else {
        block[i] = ((w >> (i - 6)) & 1U) ? ~std::uint64_t{0} : 0;
      }
    }
    words[w] = eval(block);
  }
  return BooleanFunction({}, arity, std::move(words));
}

std::vector<std::size_t> used_functions(const Formula& formula) {
  std::set<std::size_t> used;
  std::vector<const Node*> todo{&formula.root()};
  while (!todo.empty()) {
    const Node* n = todo.back();
    todo.pop_back();
    if (!n->is_variable())
      used.insert(n->index);
    for (const auto& c : n->children)
      todo.push_back(&c);
  }
  return {used.begin(), used.end()};
}

// ---------------------------------------------------------------- normal forms

namespace {

template <class Member>
void require_fragment(const Formula& formula, const char* fragment, Member&& member) {
  for (std::size_t i : used_functions(formula)) {
    const auto& f = formula.base()[i];
    if (!member(f))
      throw FragmentError("connective '" + f.name() + "' (table " + f.bits() + ") is not " + fragment);
  }
}

} // namespace

LinearForm extract_linear_nf(const Formula& formula) {
  require_fragment(formula, "linear", [](const BooleanFunction& f) { return as_linear(f).has_value(); });
  const std::size_t n = formula.num_variables();
  std::vector<bool> sigma(n, false);
  LinearForm form{evaluate(formula, sigma), std::vector<bool>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    sigma[i] = true;
    form.coefficients[i] = evaluate(formula, sigma) != form.constant;
    sigma[i] = false;
  }
  return form;
}

OrForm extract_or_nf(const Formula& formula) {
  require_fragment(formula, "a disjunction", [](const BooleanFunction& f) { return as_disjunction(f).has_value(); });
  const std::size_t n = formula.num_variables();
  std::vector<bool> sigma(n, false);
  OrForm form{evaluate(formula, sigma), std::vector<bool>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    sigma[i] = true;
    form.coefficients[i] = form.constant || evaluate(formula, sigma);
    sigma[i] = false;
  }
  return form;
}

AndForm extract_and_nf(const Formula& formula) {
  require_fragment(formula, "a conjunction", [](const BooleanFunction& f) { return as_conjunction(f).has_value(); });
  const std::size_t n = formula.num_variables();
  std::vector<bool> sigma(n, true);
  AndForm form{evaluate(formula, sigma), std::vector<bool>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    sigma[i] = false;
    form.coefficients[i] = !form.constant || !evaluate(formula, sigma);
    sigma[i] = true;
  }
  return form;
}

namespace {

UnaryForm unary_of(const Node& node, const Base& base) {
  if (node.is_variable())
    return UnaryForm::literal(node.index, true);
  const auto own = as_unary(base[node.index]);
  if (own->is_constant())
    return *own;
  const UnaryForm inner = unary_of(node.children[own->variable], base);
  return own->value ? inner : inner.negated();
}

} // namespace

UnaryForm extract_unary_nf(const Formula& formula) {
  require_fragment(formula, "unary (depends on more than one variable)",
                   [](const BooleanFunction& f) { return as_unary(f).has_value(); });
  return unary_of(formula.root(), formula.base());
}

// ---------------------------------------------------------------- Instance

namespace {

Node reindex(const Node& node, const std::vector<std::string>& names, VariableTable& table) {
  if (node.is_variable())
    return Node::variable(table.intern(names.at(node.index)));
  std::vector<Node> children;
  children.reserve(node.children.size());
  for (const auto& c : node.children)
    children.push_back(reindex(c, names, table));
  return Node::apply(node.index, std::move(children));
}

} // namespace

Instance::Instance(BasePtr base, std::vector<Formula> premises, Formula conclusion)
    : base_(std::move(base)), premises_(std::move(premises)), conclusion_(std::move(conclusion)) {
  if (!base_)
    throw Error("instance without a base");
  VariableTable table;
  std::vector<Node> roots;
  auto take = [&](const Formula& f) {
    if (f.base_ptr() != base_)
      throw Error("instance formula '" + to_string(f) + "' is over a different base");
    roots.push_back(reindex(f.root(), f.variables(), table));
  };
  for (const auto& p : premises_)
    take(p);
  take(conclusion_);
  for (std::size_t i = 0; i < premises_.size(); ++i)
    premises_[i] = Formula(base_, std::move(roots[i]), table.names());
  conclusion_ = Formula(base_, std::move(roots.back()), table.names());
}

Instance parse_instance(BasePtr base, const std::vector<std::string>& premises, std::string_view conclusion) {
  std::vector<Formula> parsed;
  parsed.reserve(premises.size());
  for (const auto& p : premises)
    parsed.push_back(parse_formula(p, base));
  Formula goal = parse_formula(conclusion, base);
  return Instance(std::move(base), std::move(parsed), std::move(goal));
}

} // namespace postimp
