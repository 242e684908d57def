#include "selftest.hpp"

#include <functional>
#include <random>

namespace postimp::selftest {
namespace {

namespace cx = connectives;

// Draws by modulo so reports do not depend on the standard library's
// distribution implementations.
class Draw {
public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
  bool chance(unsigned percent) { return below(100) < percent; }

private:
  std::mt19937_64 rng_;
};

Node random_node(Draw& draw, const Base& base, std::size_t vars, unsigned depth) {
  if (depth == 0 || draw.chance(30)) {
    std::vector<std::size_t> constants;
    for (std::size_t i = 0; i < base.size(); ++i)
      if (base[i].arity() == 0)
        constants.push_back(i);
    if (!constants.empty() && draw.chance(15))
      return Node::apply(constants[draw.below(constants.size())], {});
    return Node::variable(draw.below(vars));
  }
  const std::size_t f = draw.below(base.size());
  std::vector<Node> children;
  for (unsigned i = 0; i < base[f].arity(); ++i)
    children.push_back(random_node(draw, base, vars, depth - 1));
  return Node::apply(f, std::move(children));
}

Instance random_instance(Draw& draw, const BasePtr& base, bool single) {
  const std::size_t n = 1 + draw.below(10);
  const std::size_t k = single ? 1 : draw.below(5);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    names.push_back("x" + std::to_string(i + 1));
  std::vector<Formula> premises;
  for (std::size_t i = 0; i < k; ++i)
    premises.emplace_back(base, random_node(draw, *base, n, static_cast<unsigned>(draw.below(6))), names);
  Formula goal(base, random_node(draw, *base, n, static_cast<unsigned>(draw.below(6))), names);
  return Instance(base, std::move(premises), std::move(goal));
}

struct Suite {
  std::string name;
  Fragment fragment;
  BasePtr base;
  bool single;
  std::function<Decision(const Instance&)> decide;
};

} // namespace

std::vector<Row> run(std::uint64_t seed, std::size_t cases, std::optional<Fragment> only,
                     const OracleOptions& options) {
  const auto linear = make_base({cx::exclusive_or(), cx::xor3(), cx::negation(), cx::top(), cx::bot()});
  OracleOptions sequential = options;
  sequential.threads = 1;
  const std::vector<Suite> suites{
      {"linear", Fragment::Linear, linear, false, decide_linear},
      {"or", Fragment::Or, make_base({cx::disjunction(), cx::top(), cx::bot(), cx::identity()}), false,
       decide_or_fragment},
      {"and", Fragment::And, make_base({cx::conjunction(), cx::top(), cx::bot(), cx::identity()}), false,
       decide_and_fragment},
      {"unary", Fragment::Unary, make_base({cx::negation(), cx::identity(), cx::top(), cx::bot()}), false,
       decide_unary_fragment},
      {"single-linear", Fragment::Linear, linear, true,
       [](const Instance& i) { return decide_single_linear(i.premises()[0], i.conclusion()); }},
      {"general", Fragment::General, make_base({cx::conjunction(), cx::negation(), cx::disjunction()}), false,
       [options](const Instance& i) { return decide_oracle(i, options); }},
  };

  std::vector<Row> report;
  for (std::size_t index = 0; index < suites.size(); ++index) {
    const auto& suite = suites[index];
    const bool selected = only ? suite.fragment == *only : suite.fragment != Fragment::General;
    if (!selected)
      continue;
    // One stream per suite, so restricting the run keeps each suite's cases.
    Draw draw(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
    Row row{suite.name, 0, 0};
    for (std::size_t c = 0; c < cases; ++c) {
      const auto inst = random_instance(draw, suite.base, suite.single);
      const auto d = suite.decide(inst);
      const auto truth = decide_oracle(inst, sequential);
      const bool sound = !d.counterexample || is_counterexample(inst, *d.counterexample);
      if (d.implies != truth.implies || !sound || d.counterexample.has_value() == d.implies)
        ++row.disagreements;
      ++row.cases;
    }
    report.push_back(row);
  }
  return report;
}

} // namespace postimp::selftest
