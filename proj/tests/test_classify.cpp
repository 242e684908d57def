#include "postimp/classify.hpp"
#include "postimp/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

using namespace postimp;
namespace cx = postimp::connectives;

namespace {

BasePtr base_of(std::vector<BooleanFunction> fs) { return make_base(std::move(fs)); }

std::set<std::string> tables(const std::vector<BooleanFunction>& fs) {
  std::set<std::string> out;
  for (const auto& f : fs)
    out.insert(f.bits());
  return out;
}

bool hard_by_closure(const Base& b) {
  return contains_generator(b, cx::or_and()) || contains_generator(b, cx::and_or()) ||
         contains_generator(b, cx::majority());
}

} // namespace

TEST_CASE("classify_base on the standard bases") {
  const std::map<std::string, ComplexityClass> expected{
      {"BF", ComplexityClass::CoNPComplete},   {"M2", ComplexityClass::CoNPComplete},
      {"S00", ComplexityClass::CoNPComplete},  {"S10", ComplexityClass::CoNPComplete},
      {"D2", ComplexityClass::CoNPComplete},   {"L", ComplexityClass::ParityLComplete},
      {"L2", ComplexityClass::ParityLComplete}, {"V", ComplexityClass::AC0},
      {"E", ComplexityClass::AC0},             {"N", ComplexityClass::AC0Mod2},
      {"N2", ComplexityClass::AC0Mod2},
  };
  for (const auto& [clone, base] : standard_bases()) {
    CAPTURE(clone);
    const auto verdict = classify_base(*base);
    CHECK(verdict.complexity == expected.at(clone));
    const auto single = classify_base_single_premise(*base);
    const auto single_expected =
        expected.at(clone) == ComplexityClass::ParityLComplete ? ComplexityClass::AC0Mod2 : expected.at(clone);
    CHECK(single.complexity == single_expected);
    CHECK_FALSE(verdict.witness.empty());
  }
}

TEST_CASE("classify_base fragments and witnesses") {
  const auto bf = classify_base(*base_of({cx::conjunction(), cx::negation()}));
  CHECK(bf.fragment == Fragment::General);
  CHECK(bf.witness.find("'and' is not linear") != std::string::npos);

  CHECK(classify_base(*base_of({cx::xor3()})).fragment == Fragment::Linear);
  CHECK(classify_base(*base_of({cx::negation()})).fragment == Fragment::Unary);
  CHECK(classify_base(*base_of({cx::disjunction(), cx::bot(), cx::top()})).fragment == Fragment::Or);
  CHECK(classify_base(*base_of({cx::conjunction(), cx::bot(), cx::top()})).fragment == Fragment::And);
  CHECK(classify_base(*base_of({cx::majority()})).complexity == ComplexityClass::CoNPComplete);

  const auto single_l2 = classify_base_single_premise(*base_of({cx::xor3()}));
  CHECK(single_l2.complexity == ComplexityClass::AC0Mod2);
  CHECK(single_l2.fragment == Fragment::LinearSingleton);
  CHECK(classify_base_single_premise(*base_of({cx::negation()})).fragment == Fragment::Unary);
  CHECK(classify_base_single_premise(*base_of({cx::conjunction(), cx::negation()})).complexity ==
        ComplexityClass::CoNPComplete);
}

TEST_CASE("class and fragment stay consistent") {
  for (std::uint64_t t = 0; t < 256; ++t) {
    const auto verdict = classify_base(*base_of({BooleanFunction("g", 3, {t})}));
    switch (verdict.complexity) {
    case ComplexityClass::CoNPComplete:
      CHECK(verdict.fragment == Fragment::General);
      break;
    case ComplexityClass::ParityLComplete:
      CHECK(verdict.fragment == Fragment::Linear);
      break;
    case ComplexityClass::AC0Mod2:
      CHECK(verdict.fragment == Fragment::Unary);
      break;
    case ComplexityClass::AC0:
      CHECK((verdict.fragment == Fragment::Or || verdict.fragment == Fragment::And ||
             verdict.fragment == Fragment::Trivial));
      break;
    }
  }
}

TEST_CASE("closure_fixed_arity") {
  CHECK(tables(closure_fixed_arity(*base_of({cx::negation()}), 1)) == std::set<std::string>{"01", "10"});
  // Ternary xor on two variables only ever collapses to a projection.
  CHECK(tables(closure_fixed_arity(*base_of({cx::xor3()}), 2)) == std::set<std::string>{"0101", "0011"});
  CHECK(closure_fixed_arity(*base_of({cx::conjunction(), cx::negation()}), 2).size() == 16);
  CHECK(closure_fixed_arity(*base_of({cx::conjunction(), cx::negation()}), 3).size() == 256);
  CHECK(tables(closure_fixed_arity(*base_of({cx::top()}), 1)) == std::set<std::string>{"01", "11"});
  CHECK_THROWS_AS(closure_fixed_arity(*base_of({cx::negation()}), 5), Error);
  CHECK_THROWS_AS(closure_fixed_arity(*base_of({cx::negation()}), 0), Error);
}

TEST_CASE("contains_generator") {
  CHECK(contains_generator(*base_of({cx::conjunction(), cx::disjunction()}), cx::majority()));
  CHECK_FALSE(contains_generator(*base_of({cx::xor3()}), cx::majority()));
  CHECK(contains_generator(*base_of({cx::negation()}), cx::negation()));
  CHECK(contains_generator(*base_of({cx::exclusive_or(), cx::top()}), cx::xor3()));
  CHECK(contains_generator(*base_of({cx::negation(), cx::top()}), cx::bot()));
  CHECK_FALSE(contains_generator(*base_of({cx::negation()}), cx::top()));
  CHECK_THROWS_AS(contains_generator(*base_of({cx::negation()}), BooleanFunction::from_bits("w", 5, std::string(32, '0'))),
                  Error);
}

TEST_CASE("property: closure holds the projections and is closed under one more application") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 40; ++k) {
    std::vector<BooleanFunction> fs;
    const unsigned a = static_cast<unsigned>(rng() % 3) + 1;
    fs.emplace_back("g", a, std::vector<std::uint64_t>{rng() & ((std::uint64_t{1} << (1U << a)) - 1)});
    const auto base = base_of(fs);
    const unsigned arity = 1 + static_cast<unsigned>(rng() % 3);
    const auto closure = closure_fixed_arity(*base, arity);
    const auto members = tables(closure);
    for (unsigned i = 0; i < arity; ++i)
      CHECK(members.count(BooleanFunction::tabulate("p", arity, [i](std::uint64_t j) { return (j >> i) & 1U; }).bits()));

    // Apply g to every tuple of members row by row.
    const auto& g = fs.front();
    std::vector<std::size_t> pick(g.arity(), 0);
    while (true) {
      const auto image = BooleanFunction::tabulate("h", arity, [&](std::uint64_t row) {
        std::uint64_t arg = 0;
        for (unsigned q = 0; q < g.arity(); ++q)
          if (closure[pick[q]].at(row))
            arg |= std::uint64_t{1} << q;
        return g.at(arg);
      });
      REQUIRE(members.count(image.bits()));
      unsigned q = 0;
      while (q < g.arity() && ++pick[q] == closure.size()) {
        pick[q] = 0;
        ++q;
      }
      if (q == g.arity())
        break;
    }
  }
}

TEST_CASE("property: closure is monotone in the base") {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 30; ++k) {
    BooleanFunction f("f", 2, {rng() & 0xF});
    BooleanFunction g("g", 3, {rng() & 0xFF});
    const auto small = tables(closure_fixed_arity(*base_of({f}), 3));
    const auto large = tables(closure_fixed_arity(*base_of({f, g}), 3));
    CHECK(std::includes(large.begin(), large.end(), small.begin(), small.end()));
  }
}

TEST_CASE("dichotomy: coNP verdict iff S00, S10 or D2 lies in the clone") {
  for (unsigned a = 0; a <= 2; ++a)
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << (1U << a)); ++t) {
      const auto base = base_of({BooleanFunction("g", a, {t})});
      CAPTURE(t);
      CHECK((classify_base(*base).complexity == ComplexityClass::CoNPComplete) == hard_by_closure(*base));
    }
  std::mt19937_64 rng(21);
  for (int k = 0; k < 60; ++k) {
    std::vector<BooleanFunction> fs;
    const int count = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < count; ++i) {
      const unsigned a = static_cast<unsigned>(rng() % 4);
      fs.emplace_back("g" + std::to_string(i), a, std::vector<std::uint64_t>{rng() & ((std::uint64_t{1} << (1U << a)) - 1)});
    }
    const auto base = base_of(fs);
    const auto verdict = classify_base(*base);
    CHECK((verdict.complexity == ComplexityClass::CoNPComplete) == hard_by_closure(*base));
    if (verdict.complexity == ComplexityClass::ParityLComplete)
      CHECK(contains_generator(*base, cx::xor3()));
  }
}
