#pragma once

// Test-only generators and reference checks. Nothing here calls the
// library's evaluators or deciders; semantics come from a tree walk over
// BooleanFunction::at.

#include "postimp/boolfn.hpp"
#include "postimp/formula.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace postimp::testing {

inline bool naive_eval(const Node& node, const Base& base, const std::vector<bool>& sigma) {
  if (node.is_variable())
    return sigma.at(node.index);
  std::size_t row = 0;
  for (std::size_t i = 0; i < node.children.size(); ++i)
    if (naive_eval(node.children[i], base, sigma))
      row |= std::size_t{1} << i;
  return base[node.index].at(row);
}

inline std::vector<bool> assignment(std::uint64_t index, std::size_t n) {
  std::vector<bool> sigma(n);
  for (std::size_t i = 0; i < n; ++i)
    sigma[i] = (index >> i) & 1U;
  return sigma;
}

/// Entailment by plain enumeration, one assignment at a time.
inline bool naive_implies(const Instance& inst) {
  const std::size_t n = inst.num_variables();
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
    const auto sigma = assignment(a, n);
    bool premises = true;
    for (const auto& p : inst.premises())
      premises = premises && naive_eval(p.root(), p.base(), sigma);
    if (premises && !naive_eval(inst.conclusion().root(), inst.base(), sigma))
      return false;
  }
  return true;
}

/// Truth table of a node over n variables, as a row-indexed bit vector.
inline std::vector<bool> naive_table(const Node& node, const Base& base, std::size_t n) {
  std::vector<bool> out(std::size_t{1} << n);
  for (std::uint64_t a = 0; a < out.size(); ++a)
    out[a] = naive_eval(node, base, assignment(a, n));
  return out;
}

inline std::vector<std::string> variable_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    names.push_back("v" + std::to_string(i));
  return names;
}

/// Uniform random tree: leaves are variables or 0-ary connectives.
inline Node random_node(std::mt19937_64& rng, const Base& base, std::size_t num_variables, unsigned depth) {
  std::uniform_int_distribution<std::size_t> pick_var(0, num_variables - 1);
  std::uniform_int_distribution<std::size_t> pick_fn(0, base.size() - 1);
  std::bernoulli_distribution stop(0.3);
  if (depth == 0 || stop(rng)) {
    // Mostly variables; occasionally a constant if the base has one.
    std::vector<std::size_t> constants;
    for (std::size_t i = 0; i < base.size(); ++i)
      if (base[i].arity() == 0)
        constants.push_back(i);
    if (!constants.empty() && std::bernoulli_distribution(0.15)(rng))
      return Node::apply(constants[std::uniform_int_distribution<std::size_t>(0, constants.size() - 1)(rng)], {});
    return Node::variable(pick_var(rng));
  }
  const std::size_t f = pick_fn(rng);
  std::vector<Node> children;
  for (unsigned i = 0; i < base[f].arity(); ++i)
    children.push_back(random_node(rng, base, num_variables, depth - 1));
  return Node::apply(f, std::move(children));
}

inline Formula random_formula(std::mt19937_64& rng, const BasePtr& base, std::size_t num_variables, unsigned depth) {
  return Formula(base, random_node(rng, *base, num_variables, depth), variable_names(num_variables));
}

/// Random instance with 1..max_vars variables and 0..max_premises premises.
inline Instance random_instance(std::mt19937_64& rng, const BasePtr& base, std::size_t max_vars,
                                std::size_t max_premises, unsigned max_depth) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_vars)(rng);
  const std::size_t k = std::uniform_int_distribution<std::size_t>(0, max_premises)(rng);
  std::vector<Formula> premises;
  for (std::size_t i = 0; i < k; ++i)
    premises.push_back(random_formula(rng, base, n, std::uniform_int_distribution<unsigned>(0, max_depth)(rng)));
  Formula goal = random_formula(rng, base, n, std::uniform_int_distribution<unsigned>(0, max_depth)(rng));
  return Instance(base, std::move(premises), std::move(goal));
}

/// Formulae over `n` variables of depth <= max_depth, keeping at most
/// `per_function` syntactic representatives of each distinct truth table.
inline std::vector<Formula> micro_formulas(const BasePtr& base, std::size_t n, unsigned max_depth,
                                           std::size_t per_function) {
  std::vector<Node> pool;
  std::map<std::vector<bool>, std::size_t> seen;
  auto offer = [&](Node node) {
    auto& count = seen[naive_table(node, *base, n)];
    if (count < per_function) {
      ++count;
      pool.push_back(std::move(node));
    }
  };
  for (std::size_t i = 0; i < n; ++i)
    offer(Node::variable(i));
  for (unsigned d = 1; d <= max_depth; ++d) {
    const std::vector<Node> previous = pool;
    for (std::size_t f = 0; f < base->size(); ++f) {
      const unsigned a = (*base)[f].arity();
      std::vector<std::size_t> pick(a, 0);
      while (true) {
        std::vector<Node> children;
        for (unsigned q = 0; q < a; ++q)
          children.push_back(previous[pick[q]]);
        offer(Node::apply(f, std::move(children)));
        unsigned q = 0;
        while (q < a && ++pick[q] == previous.size()) {
          pick[q] = 0;
          ++q;
        }
        if (q == a)
          break;
      }
    }
  }
  std::vector<Formula> out;
  for (auto& node : pool)
    out.emplace_back(base, std::move(node), variable_names(n));
  return out;
}

/// Fragment bases used by the randomized and exhaustive comparisons.
inline BasePtr linear_fragment_base() {
  return make_base({connectives::exclusive_or(), connectives::xor3(), connectives::negation(), connectives::top(),
                    connectives::bot(), BooleanFunction::from_bits("eq", "1001")});
}
inline BasePtr or_fragment_base() {
  return make_base({connectives::disjunction(), BooleanFunction::from_bits("or3", "01111111"), connectives::top(),
                    connectives::bot(), connectives::identity()});
}
inline BasePtr and_fragment_base() {
  return make_base({connectives::conjunction(), BooleanFunction::from_bits("and3", "00000001"), connectives::top(),
                    connectives::bot(), connectives::identity()});
}
inline BasePtr unary_fragment_base() {
  // notfst(x, y) = not x, with y fictive.
  return make_base({connectives::negation(), connectives::identity(), connectives::top(), connectives::bot(),
                    BooleanFunction::from_bits("notfst", "1010")});
}

} // namespace postimp::testing
