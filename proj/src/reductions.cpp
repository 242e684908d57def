#include "postimp/reductions.hpp"

#include "postimp/error.hpp"

#include <algorithm>
#include <set>

namespace postimp {

Dnf normalize(const Dnf& dnf) {
  Dnf out{dnf.num_variables, {}};
  const std::vector<Literal>* contradictory = nullptr;
  for (const auto& term : dnf.terms) {
    std::set<Literal> lits(term.begin(), term.end());
    bool clash = false;
    for (const auto& l : lits)
      if (l.positive && lits.count(Literal{l.variable, false}))
        clash = true;
    if (clash) {
      if (!contradictory)
        contradictory = &term;
      continue;
    }
    out.terms.emplace_back(lits.begin(), lits.end());
  }
  if (out.terms.empty() && contradictory) {
    std::set<Literal> lits(contradictory->begin(), contradictory->end());
    out.terms.emplace_back(lits.begin(), lits.end());
  }
  return out;
}

bool is_tautology(const Dnf& dnf) {
  if (dnf.num_variables >= 40)
    throw Error("tautology check over " + std::to_string(dnf.num_variables) + " variables refused");
  const std::uint64_t rows = std::uint64_t{1} << dnf.num_variables;
  for (std::uint64_t a = 0; a < rows; ++a) {
    bool sat = false;
    for (const auto& term : dnf.terms) {
      bool all = true;
      for (const auto& l : term)
        if ((((a >> l.variable) & 1U) != 0) != l.positive) {
          all = false;
          break;
        }
      if (all) {
        sat = true;
        break;
      }
    }
    if (!sat)
      return false;
  }
  return true;
}

BasePtr monotone_base() {
  static const BasePtr base = make_base({connectives::conjunction(), connectives::disjunction()});
  return base;
}

BasePtr majority_base() {
  static const BasePtr base = make_base({connectives::majority()});
  return base;
}

BasePtr xor3_base() {
  static const BasePtr base = make_base({connectives::xor3()});
  return base;
}

BasePtr negation_base() {
  static const BasePtr base = make_base({connectives::negation()});
  return base;
}

namespace {

/// Assembles formulae over one base and one growing variable index.
class Builder {
public:
  explicit Builder(BasePtr base) : base_(std::move(base)) {}

  Node var(const std::string& name) { return Node::variable(vars_.intern(name)); }

  Node apply(std::string_view function, std::vector<Node> children) {
    return Node::apply(*base_->find(function), std::move(children));
  }

  /// Balanced binary tree of `combine` over the items; depth ceil(log2 n).
  template <class Combine>
  Node balanced(std::vector<Node> items, Combine&& combine) {
    return balanced(items, 0, items.size(), combine);
  }

  Instance instance(std::vector<Node> premises, Node conclusion) {
    std::vector<Formula> ps;
    for (auto& p : premises)
      ps.emplace_back(base_, std::move(p), vars_.names());
    return Instance(base_, std::move(ps), Formula(base_, std::move(conclusion), vars_.names()));
  }

private:
  template <class Combine>
  Node balanced(std::vector<Node>& items, std::size_t lo, std::size_t hi, Combine& combine) {
    if (hi - lo == 1)
      return std::move(items[lo]);
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    Node left = balanced(items, lo, mid, combine);
    Node right = balanced(items, mid, hi, combine);
    return combine(std::move(left), std::move(right));
  }

  BasePtr base_;
  VariableTable vars_;
};

std::string x_name(std::size_t i) { return "x" + std::to_string(i + 1); }
std::string y_name(std::size_t i) { return "y" + std::to_string(i + 1); }

Dnf checked(const Dnf& dnf) {
  if (dnf.terms.empty())
    throw Error("empty DNF: at least one term is required");
  if (dnf.num_variables == 0)
    throw Error("DNF without variables");
  for (const auto& term : dnf.terms) {
    if (term.empty())
      throw Error("DNF term without literals");
    for (const auto& l : term)
      if (l.variable >= dnf.num_variables)
        throw Error("DNF literal x" + std::to_string(l.variable + 1) + " beyond the declared " +
                    std::to_string(dnf.num_variables) + " variables");
  }
  return normalize(dnf);
}

// psi1 and psi2 of the monotone construction, with `conj` / `disj` building
// the binary connectives.
template <class Conj, class Disj>
std::pair<Node, Node> monotone_pair(Builder& b, const Dnf& dnf, Conj&& conj, Disj&& disj) {
  std::vector<Node> terms;
  for (const auto& term : dnf.terms) {
    std::vector<Node> lits;
    for (const auto& l : term)
      lits.push_back(b.var(l.positive ? x_name(l.variable) : y_name(l.variable)));
    terms.push_back(b.balanced(std::move(lits), conj));
  }
  Node psi2 = b.balanced(std::move(terms), disj);

  // Clauses for variables absent from the DNF cannot change the answer.
  std::vector<bool> occurs(dnf.num_variables, false);
  for (const auto& term : dnf.terms)
    for (const auto& l : term)
      occurs[l.variable] = true;
  std::vector<Node> clauses;
  for (std::size_t i = 0; i < dnf.num_variables; ++i)
    if (occurs[i])
      clauses.push_back(disj(b.var(x_name(i)), b.var(y_name(i))));
  Node psi1 = b.balanced(std::move(clauses), conj);
  return {std::move(psi1), std::move(psi2)};
}

} // namespace

Instance reduce_tautdnf_monotone(const Dnf& input) {
  const Dnf dnf = checked(input);
  Builder b(monotone_base());
  auto conj = [&](Node l, Node r) { return b.apply("and", {std::move(l), std::move(r)}); };
  auto disj = [&](Node l, Node r) { return b.apply("or", {std::move(l), std::move(r)}); };
  auto [psi1, psi2] = monotone_pair(b, dnf, conj, disj);
  return b.instance({std::move(psi1)}, std::move(psi2));
}

Instance reduce_tautdnf_d2(const Dnf& input) {
  const Dnf dnf = checked(input);
  Builder b(majority_base());
  auto maj = [&](Node x, Node y, Node z) { return b.apply("maj", {std::move(x), std::move(y), std::move(z)}); };
  auto conj = [&](Node l, Node r) { return maj(std::move(l), std::move(r), b.var("f")); };
  auto disj = [&](Node l, Node r) { return maj(std::move(l), std::move(r), b.var("t")); };
  auto [psi1, psi2] = monotone_pair(b, dnf, conj, disj);
  Node premise = maj(psi1, b.var("t"), b.var("f"));
  Node conclusion = maj(maj(std::move(psi1), std::move(psi2), b.var("f")), b.var("t"), b.var("f"));
  return b.instance({std::move(premise)}, std::move(conclusion));
}

LinsysReduction reduce_linsys_to_imp(const gf2::System& system) {
  if (system.size() == 0)
    throw Error("linear system without equations");
  Builder b(xor3_base());
  std::vector<Node> premises;
  for (const auto& row : system.rows()) {
    std::vector<Node> leaves;
    // c' = 1 (rendered as t) exactly when the right-hand side is 0.
    if (!row.rhs())
      leaves.push_back(b.var("t"));
    for (std::size_t i = 0; i < system.unknowns(); ++i)
      if (row.coefficient(i))
        leaves.push_back(b.var(x_name(i)));
    if (leaves.size() % 2 == 0)
      leaves.push_back(b.var("f"));
    Node acc = std::move(leaves[0]);
    for (std::size_t i = 1; i + 1 < leaves.size(); i += 2)
      acc = b.apply("xor3", {std::move(acc), std::move(leaves[i]), std::move(leaves[i + 1])});
    premises.push_back(std::move(acc));
  }
  premises.push_back(b.var("t"));
  Node goal = b.var("f");
  return {b.instance(std::move(premises), std::move(goal)), "f"};
}

namespace {

void check_bits(std::string_view w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != '0' && w[i] != '1')
      throw ParseError("non-binary character in word", {}, 0, i + 1, std::string(1, w[i]));
}

} // namespace

Instance reduce_mod2_unary(std::string_view w) {
  check_bits(w);
  Builder b(negation_base());
  Node premise = b.var("t");
  Node body = b.apply("not", {b.var("t")});
  for (std::size_t i = w.size(); i-- > 0;)
    if (w[i] == '1')
      body = b.apply("not", {std::move(body)});
  return b.instance({std::move(premise)}, std::move(body));
}

Instance reduce_mod2_single_linear(std::string_view w) {
  check_bits(w);
  Builder b(xor3_base());
  Node premise = b.var("t");
  b.var("f");
  Node h = b.var("f");
  for (std::size_t i = w.size(); i-- > 0;)
    if (w[i] == '1')
      h = b.apply("xor3", {b.var("t"), b.var("f"), std::move(h)});
  return b.instance({std::move(premise)}, std::move(h));
}

} // namespace postimp
