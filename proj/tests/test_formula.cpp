#include "postimp/error.hpp"
#include "postimp/formula.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace postimp;
using namespace postimp::testing;
namespace cx = postimp::connectives;

namespace {

BasePtr and_not() { return make_base({cx::conjunction(), cx::negation()}); }
BasePtr maj_only() { return make_base({cx::majority()}); }
BasePtr xor3_only() { return make_base({cx::xor3()}); }

std::vector<bool> bits(std::initializer_list<int> v) {
  std::vector<bool> out;
  for (int b : v)
    out.push_back(b != 0);
  return out;
}

} // namespace

TEST_CASE("parse builds the expected tree") {
  const auto base = and_not();
  const Formula f = parse_formula("and(x, not(y))", base);
  const Node expected = Node::apply(0, {Node::variable(0), Node::apply(1, {Node::variable(1)})});
  CHECK(f.root() == expected);
  CHECK(f.variables() == std::vector<std::string>{"x", "y"});
  CHECK(to_string(f) == "and(x, not(y))");

  const Formula g = parse_formula("  xor3( x ,y,z )", xor3_only());
  CHECK(g.root().children.size() == 3);
  CHECK(to_string(g) == "xor3(x, y, z)");
}

TEST_CASE("0-ary connectives parse bare or with empty parentheses") {
  const auto base = make_base({cx::disjunction(), cx::top(), cx::bot()});
  const Formula a = parse_formula("or(x, top)", base);
  const Formula b = parse_formula("or(x, top())", base);
  CHECK(a.root() == b.root());
  CHECK(to_string(a) == "or(x, top())");
}

TEST_CASE("parse errors name the problem and position") {
  const auto base = and_not();
  auto error_of = [&](std::string_view text) -> ParseError {
    try {
      parse_formula(text, base);
    } catch (const ParseError& e) {
      return e;
    }
    FAIL("no error for " << text);
    return ParseError("none", {}, 0, 0);
  };

  const auto arity = error_of("and(x)");
  CHECK(arity.message().find("arity mismatch") != std::string::npos);
  CHECK(arity.message().find("expects 2") != std::string::npos);
  CHECK(arity.column() == 1);

  const auto unknown = error_of("and(x, foo(y))");
  CHECK(unknown.message() == "unknown symbol");
  CHECK(unknown.token() == "foo");
  CHECK(unknown.column() == 8);

  CHECK(error_of("").message() == "empty formula");
  CHECK(error_of("   ").message() == "empty formula");
  CHECK(error_of("X").token() == "X");
  CHECK(error_of("not").message().find("arity mismatch") != std::string::npos);
  CHECK(error_of("x y").message() == "unexpected trailing input");
  CHECK(error_of("and(x, y").message().find("expected ')'") != std::string::npos);
}

TEST_CASE("evaluate") {
  CHECK(evaluate(parse_formula("and(x, not(y))", and_not()), bits({1, 0})));
  // Fixing the third majority input to 0 gives conjunction, to 1 disjunction.
  CHECK_FALSE(evaluate(parse_formula("maj(x, y, f)", maj_only()), bits({1, 0, 0})));
  CHECK(evaluate(parse_formula("maj(x, y, t)", maj_only()), bits({1, 0, 1})));
  CHECK_THROWS_AS(evaluate(parse_formula("and(x, y)", and_not()), bits({1})), ArityError);
}

TEST_CASE("evaluate_block works lane-wise") {
  const auto base = and_not();
  const std::uint64_t x = 0b01;
  CHECK(evaluate_block(parse_formula("x", base), std::vector<std::uint64_t>{x}) == 0b01);
  const std::uint64_t w = 0xDEADBEEF12345678ULL;
  CHECK(evaluate_block(parse_formula("not(x)", base), std::vector<std::uint64_t>{w}) == ~w);
  const std::vector<std::uint64_t> xy{0b0101, 0b0011};
  CHECK((evaluate_block(parse_formula("and(x, y)", base), xy) & 0xF) == 0b0001);
}

TEST_CASE("truth_table") {
  CHECK(truth_table(parse_formula("x", and_not())).bits() == "01");
  CHECK(truth_table(parse_formula("xor3(x, y, z)", xor3_only())) == cx::xor3());
  // maj(x, x, y) = x, enumerated over (x, y)
  CHECK(truth_table(parse_formula("maj(x, x, y)", maj_only())).bits() == "0101");
}

TEST_CASE("linear normal form extraction") {
  const auto base = xor3_only();
  CHECK(extract_linear_nf(parse_formula("xor3(x, y, z)", base)) == LinearForm{false, bits({1, 1, 1})});
  CHECK(extract_linear_nf(parse_formula("xor3(x, x, y)", base)) == LinearForm{false, bits({0, 1})});
  CHECK(extract_linear_nf(parse_formula("xor3(t, t, t)", base)) == LinearForm{false, bits({1})});
  CHECK_THROWS_AS(extract_linear_nf(parse_formula("and(x, y)", and_not())), FragmentError);
}

TEST_CASE("disjunctive and conjunctive normal form extraction") {
  const auto v = make_base({cx::disjunction(), cx::top(), cx::bot()});
  const auto top_or = extract_or_nf(parse_formula("or(x, or(y, top()))", v));
  CHECK(top_or.constant);
  CHECK(extract_or_nf(parse_formula("or(x, y)", v)) == OrForm{false, bits({1, 1})});
  CHECK(extract_or_nf(parse_formula("or(x, bot)", v)) == OrForm{false, bits({1})});

  const auto e = make_base({cx::conjunction(), cx::top(), cx::bot()});
  CHECK_FALSE(extract_and_nf(parse_formula("and(x, bot())", e)).constant);
  CHECK(extract_and_nf(parse_formula("and(x, and(y, top))", e)) == AndForm{true, bits({1, 1})});
  CHECK_THROWS_AS(extract_and_nf(parse_formula("or(x, y)", v)), FragmentError);
  CHECK_THROWS_AS(extract_or_nf(parse_formula("and(x, y)", e)), FragmentError);
}

TEST_CASE("unary normal form extraction") {
  const auto n = make_base({cx::negation(), cx::top()});
  CHECK(extract_unary_nf(parse_formula("not(not(t))", n)) == UnaryForm::literal(0, true));
  CHECK(extract_unary_nf(parse_formula("not(t)", n)) == UnaryForm::literal(0, false));
  CHECK(extract_unary_nf(parse_formula("top()", n)) == UnaryForm::constant(true));
  CHECK(extract_unary_nf(parse_formula("not(top)", n)) == UnaryForm::constant(false));

  // The second argument of notfst is fictive; only the first is followed.
  const auto fictive = unary_fragment_base();
  const Formula f = parse_formula("notfst(notfst(a, b), c)", fictive);
  CHECK(extract_unary_nf(f) == UnaryForm::literal(0, true));
  CHECK_THROWS_AS(extract_unary_nf(parse_formula("and(x, y)", and_not())), FragmentError);
}

TEST_CASE("instances index variables by first occurrence") {
  const auto base = and_not();
  const Instance inst = parse_instance(base, {"and(b, a)", "c"}, "and(a, d)");
  CHECK(inst.variables() == std::vector<std::string>{"b", "a", "c", "d"});
  for (const auto& p : inst.premises())
    CHECK(p.num_variables() == 4);
  CHECK(to_string(inst.conclusion()) == "and(a, d)");
  CHECK_THROWS_AS(Instance(base, {}, parse_formula("x", and_not())), Error);
}

TEST_CASE("property: print then parse is the identity on trees") {
  std::mt19937_64 rng(7);
  const std::vector<BasePtr> bases{and_not(), maj_only(), linear_fragment_base(), or_fragment_base(),
                                   unary_fragment_base()};
  for (int i = 0; i < 500; ++i) {
    const auto& base = bases[i % bases.size()];
    const Formula f = random_formula(rng, base, 6, 5);
    const std::string text = to_string(f);
    const Formula g = parse_formula(text, base);
    // Reparse renumbers variables by first occurrence; compare by text and tables.
    CHECK(to_string(g) == text);
    CHECK(to_string(parse_formula(to_string(g), base)) == text);
  }
}

TEST_CASE("property: block evaluation matches per-assignment evaluation") {
  std::mt19937_64 rng(11);
  const auto base = make_base({cx::conjunction(), cx::negation(), cx::majority(), cx::xor3(), cx::top()});
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + i % 8;
    const Formula f = random_formula(rng, base, n, 5);
    std::vector<std::uint64_t> block(n);
    for (auto& w : block)
      w = rng();
    const std::uint64_t result = evaluate_block(f, block);
    for (unsigned lane = 0; lane < 64; ++lane) {
      std::vector<bool> sigma(n);
      for (std::size_t v = 0; v < n; ++v)
        sigma[v] = (block[v] >> lane) & 1U;
      REQUIRE(((result >> lane) & 1U) == naive_eval(f.root(), *base, sigma));
    }
  }
}

TEST_CASE("property: normal forms reproduce the formula on every assignment") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 400; ++i) {
    const std::size_t n = 1 + i % 12;
    const unsigned d = 1 + i % 5;
    const Formula lin = random_formula(rng, linear_fragment_base(), n, d);
    const Formula disj = random_formula(rng, or_fragment_base(), n, d);
    const Formula conj = random_formula(rng, and_fragment_base(), n, d);
    const Formula un = random_formula(rng, unary_fragment_base(), n, d);

    const auto lf = extract_linear_nf(lin);
    const auto of = extract_or_nf(disj);
    const auto af = extract_and_nf(conj);
    const auto uf = extract_unary_nf(un);
    // Exhaustive up to 12 variables: 4096 assignments each.
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
      const auto sigma = assignment(a, n);
      REQUIRE(evaluate(lf, sigma) == naive_eval(lin.root(), lin.base(), sigma));
      REQUIRE(evaluate(of, sigma) == naive_eval(disj.root(), disj.base(), sigma));
      REQUIRE(evaluate(af, sigma) == naive_eval(conj.root(), conj.base(), sigma));
      REQUIRE(evaluate(uf, sigma) == naive_eval(un.root(), un.base(), sigma));
    }
    CHECK(truth_table(lin) == to_function(lf, static_cast<unsigned>(n)));
  }
}

TEST_CASE("node_count and depth") {
  const Formula f = parse_formula("and(x, not(and(y, z)))", and_not());
  CHECK(node_count(f.root()) == 6);
  CHECK(depth(f.root()) == 3);
  CHECK(depth(parse_formula("x", and_not()).root()) == 0);
}
