#include "postimp/decide.hpp"
#include "postimp/error.hpp"
#include "postimp/reductions.hpp"

#include "support.hpp"

#include <doctest.h>

#include <bit>
#include <cmath>

using namespace postimp;
using namespace postimp::testing;

namespace {

Literal pos(std::size_t v) { return {v, true}; }
Literal neg(std::size_t v) { return {v, false}; }

// Tautology by direct evaluation of each term.
bool ref_tautology(const Dnf& dnf) {
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << dnf.num_variables); ++a) {
    bool any = false;
    for (const auto& term : dnf.terms) {
      bool all = true;
      for (const auto& l : term)
        all = all && (((a >> l.variable) & 1U) != 0) == l.positive;
      any = any || all;
    }
    if (!any)
      return false;
  }
  return true;
}

unsigned ceil_log2(std::size_t n) { return n <= 1 ? 0 : static_cast<unsigned>(std::bit_width(n - 1)); }

bool odd(std::string_view w) { return std::count(w.begin(), w.end(), '1') % 2 == 1; }

} // namespace

TEST_CASE("normalize") {
  const Dnf d{2, {{pos(1), pos(0), pos(1)}, {pos(0), neg(0)}}};
  const auto n = normalize(d);
  REQUIRE(n.terms.size() == 1);
  CHECK(n.terms[0] == std::vector<Literal>{pos(0), pos(1)});
  const auto all_bad = normalize(Dnf{1, {{pos(0), neg(0)}}});
  CHECK(all_bad.terms.size() == 1);
  CHECK_FALSE(is_tautology(all_bad));
}

TEST_CASE("monotone TAUT-DNF construction") {
  const auto excluded_middle = reduce_tautdnf_monotone(Dnf{1, {{pos(0)}, {neg(0)}}});
  CHECK(to_string(excluded_middle.premises()[0]) == "or(x1, y1)");
  CHECK(to_string(excluded_middle.conclusion()) == "or(x1, y1)");
  CHECK(naive_implies(excluded_middle));

  const auto single = reduce_tautdnf_monotone(Dnf{1, {{pos(0)}}});
  CHECK(to_string(single.conclusion()) == "x1");
  const auto d = decide_oracle(single);
  CHECK_FALSE(d.implies);
  CHECK(format_assignment(single.variables(), *d.counterexample) == "x1=0 y1=1");

  const Dnf three{2, {{pos(0), neg(1)}, {neg(0)}, {pos(1)}}};
  CHECK(is_tautology(three));
  CHECK(naive_implies(reduce_tautdnf_monotone(three)));
  CHECK_THROWS_AS(reduce_tautdnf_monotone(Dnf{1, {}}), Error);
  CHECK_THROWS_AS(reduce_tautdnf_monotone(Dnf{1, {{pos(3)}}}), Error);
}

TEST_CASE("majority TAUT-DNF construction") {
  CHECK(naive_implies(reduce_tautdnf_d2(Dnf{1, {{pos(0)}, {neg(0)}}})));
  CHECK_FALSE(naive_implies(reduce_tautdnf_d2(Dnf{1, {{pos(0)}}})));
  const auto inst = reduce_tautdnf_d2(Dnf{1, {{pos(0)}}});
  for (const auto& f : inst.base().functions())
    CHECK(f.name() == "maj");
}

TEST_CASE("depth of the majority conclusion") {
  std::mt19937_64 rng(41);
  Dnf d{8, {}};
  for (int t = 0; t < 8; ++t) {
    std::vector<Literal> term;
    for (std::size_t v = 0; v < 4; ++v)
      term.push_back({v + (t % 2) * 4, (rng() & 1U) != 0});
    d.terms.push_back(term);
  }
  const auto inst = reduce_tautdnf_d2(d);
  CHECK(depth(inst.conclusion().root()) <= 3 + 2 + 3);
}

TEST_CASE("linear system construction") {
  gf2::System one(1);
  one.add(std::vector<bool>{true}, true);
  const auto r = reduce_linsys_to_imp(one);
  CHECK(r.goal == "f");
  CHECK_FALSE(naive_implies(r.instance));

  gf2::System clash(2);
  clash.add(std::vector<bool>{true, true}, true);
  clash.add(std::vector<bool>{true, true}, false);
  CHECK(naive_implies(reduce_linsys_to_imp(clash).instance));

  gf2::System cycle(3);
  cycle.add(std::vector<bool>{true, true, false}, true);
  cycle.add(std::vector<bool>{false, true, true}, true);
  cycle.add(std::vector<bool>{true, false, true}, true);
  const auto c = reduce_linsys_to_imp(cycle);
  CHECK(naive_implies(c.instance));
  for (const auto& f : c.instance.base().functions())
    CHECK(f.name() == "xor3");
}

TEST_CASE("MOD2 constructions") {
  CHECK(naive_implies(reduce_mod2_unary("1")));
  CHECK_FALSE(naive_implies(reduce_mod2_unary("11")));
  CHECK_FALSE(naive_implies(reduce_mod2_unary("")));
  CHECK(to_string(reduce_mod2_unary("1").conclusion()) == "not(not(t))");

  CHECK(to_string(reduce_mod2_single_linear("1").conclusion()) == "xor3(t, f, f)");
  CHECK(naive_implies(reduce_mod2_single_linear("10")));
  CHECK(to_string(reduce_mod2_single_linear("11").conclusion()) == "xor3(t, f, xor3(t, f, f))");
  CHECK_FALSE(naive_implies(reduce_mod2_single_linear("11")));
  CHECK_THROWS_AS(reduce_mod2_unary("12"), ParseError);
}

TEST_CASE("property: DNF constructions preserve tautology on small inputs") {
  std::mt19937_64 rng(43);
  for (int k = 0; k < 300; ++k) {
    Dnf d{1 + rng() % 3, {}};
    const std::size_t terms = 1 + rng() % 3;
    for (std::size_t t = 0; t < terms; ++t) {
      std::vector<Literal> term;
      const std::size_t width = 1 + rng() % 3;
      for (std::size_t i = 0; i < width; ++i)
        term.push_back({rng() % d.num_variables, (rng() & 1U) != 0});
      d.terms.push_back(term);
    }
    const bool taut = ref_tautology(d);
    REQUIRE(is_tautology(d) == taut);
    REQUIRE(naive_implies(reduce_tautdnf_monotone(d)) == taut);
    REQUIRE(naive_implies(reduce_tautdnf_d2(d)) == taut);
  }
}

TEST_CASE("property: linear systems are solvable iff the goal does not follow") {
  std::mt19937_64 rng(47);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 1 + rng() % 4, m = 1 + rng() % 4;
    gf2::System s(n);
    for (std::size_t r = 0; r < m; ++r) {
      std::vector<bool> row(n);
      for (std::size_t i = 0; i < n; ++i)
        row[i] = rng() % 2 == 0;
      s.add(row, (rng() & 1U) != 0);
    }
    // Brute-force solvability, independent of the eliminator.
    bool solvable = false;
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << n) && !solvable; ++a)
      solvable = s.satisfied_by(assignment(a, n));
    REQUIRE(naive_implies(reduce_linsys_to_imp(s).instance) == !solvable);
  }
}

TEST_CASE("property: MOD2 constructions decide parity for all short words") {
  for (std::size_t len = 0; len <= 8; ++len)
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
      std::string w;
      for (std::size_t i = 0; i < len; ++i)
        w.push_back(((v >> i) & 1U) ? '1' : '0');
      REQUIRE(naive_implies(reduce_mod2_unary(w)) == odd(w));
      REQUIRE(naive_implies(reduce_mod2_single_linear(w)) == odd(w));
    }
}

TEST_CASE("property: balanced trees keep the majority conclusion shallow") {
  std::mt19937_64 rng(53);
  for (int k = 0; k < 100; ++k) {
    const std::size_t terms = 1 + rng() % 32, width = 1 + rng() % 8;
    Dnf d{width, {}};
    for (std::size_t t = 0; t < terms; ++t) {
      std::vector<Literal> term;
      for (std::size_t i = 0; i < width; ++i)
        term.push_back({i, (rng() & 1U) != 0});
      d.terms.push_back(term);
    }
    const auto n = normalize(d);
    std::size_t widest = 0;
    for (const auto& t : n.terms)
      widest = std::max(widest, t.size());
    const auto inst = reduce_tautdnf_d2(d);
    REQUIRE(depth(inst.conclusion().root()) <= ceil_log2(n.terms.size()) + ceil_log2(widest) + 3);
  }
}
