#include "postimp/classify.hpp"

#include "postimp/error.hpp"

#include <algorithm>

namespace postimp {

std::string_view to_string(ComplexityClass c) {
  switch (c) {
  case ComplexityClass::CoNPComplete:
    return "coNP-complete";
  case ComplexityClass::ParityLComplete:
    return "ParityL-complete";
  case ComplexityClass::AC0Mod2:
    return "AC0[2]";
  case ComplexityClass::AC0:
    return "AC0";
  }
  return "?";
}

std::string_view to_string(Fragment f) {
  switch (f) {
  case Fragment::General:
    return "general";
  case Fragment::Linear:
    return "linear";
  case Fragment::LinearSingleton:
    return "linear-singleton";
  case Fragment::Or:
    return "or";
  case Fragment::And:
    return "and";
  case Fragment::Unary:
    return "unary";
  case Fragment::Trivial:
    return "trivial";
  }
  return "?";
}

namespace {

template <class Pred>
const BooleanFunction* first_outside(const Base& base, Pred&& member) {
  for (const auto& f : base.functions())
    if (!member(f))
      return &f;
  return nullptr;
}

std::string quoted(const BooleanFunction& f) { return "'" + f.name() + "'"; }

} // namespace

ImpComplexity classify_base(const Base& base) {
  const auto* not_or = first_outside(base, [](const auto& f) { return as_disjunction(f).has_value(); });
  if (!not_or)
    return {ComplexityClass::AC0, Fragment::Or, "every connective is a constant or a disjunction (clone V)"};

  const auto* not_and = first_outside(base, [](const auto& f) { return as_conjunction(f).has_value(); });
  if (!not_and)
    return {ComplexityClass::AC0, Fragment::And, "every connective is a constant or a conjunction (clone E)"};

  const auto* not_linear = first_outside(base, [](const auto& f) { return is_linear(f); });
  if (!not_linear) {
    const auto* wide = first_outside(base, [](const auto& f) { return as_unary(f).has_value(); });
    if (wide)
      return {ComplexityClass::ParityLComplete, Fragment::Linear,
              quoted(*wide) + " is linear in " + std::to_string(relevant_variables(*wide).size()) +
                  " variables, so the base generates L2"};
    for (const auto& f : base.functions()) {
      const auto u = as_unary(f);
      if (!u->is_constant() && !u->value)
        return {ComplexityClass::AC0Mod2, Fragment::Unary,
                quoted(f) + " is a negated literal and every connective depends on at most one variable"};
    }
    return {ComplexityClass::AC0, Fragment::Trivial, "only constants and projections"};
  }

  return {ComplexityClass::CoNPComplete, Fragment::General,
          quoted(*not_or) + " is not a disjunction; " + quoted(*not_and) + " is not a conjunction; " +
              quoted(*not_linear) + " is not linear"};
}

ImpComplexity classify_base_single_premise(const Base& base) {
  ImpComplexity verdict = classify_base(base);
  if (verdict.fragment == Fragment::Linear) {
    verdict.complexity = ComplexityClass::AC0Mod2;
    verdict.fragment = Fragment::LinearSingleton;
    verdict.witness += "; a single linear premise entails only equivalent formulae";
  }
  return verdict;
}

namespace {

using Table = std::uint64_t;

// Semi-naive fixpoint over tables of k-ary functions (2^k <= 16 bits).
// Returns true if `stop` accepted a member.
template <class Stop>
bool run_closure(const Base& base, unsigned k, std::vector<Table>& members, Stop&& stop) {
  if (k < 1 || k > max_closure_arity)
    throw Error("closure arity " + std::to_string(k) + " outside 1.." + std::to_string(max_closure_arity));
  const std::size_t rows = std::size_t{1} << k;
  const Table mask = (Table{1} << rows) - 1;
  std::vector<bool> seen(std::size_t{1} << rows, false);

  auto admit = [&](Table t) {
    if (seen[t])
      return false;
    seen[t] = true;
    members.push_back(t);
    return stop(t);
  };

  for (unsigned i = 0; i < k; ++i) {
    Table t = 0;
    for (std::size_t j = 0; j < rows; ++j)
      if ((j >> i) & 1U)
        t |= Table{1} << j;
    if (admit(t))
      return true;
  }
  for (const auto& f : base.functions())
    if (f.arity() == 0 && admit(f.at(0) ? mask : 0))
      return true;

  std::size_t frontier = 0;
  std::vector<Table> args;
  std::vector<std::size_t> pick;
  while (frontier < members.size()) {
    const std::size_t end = members.size();
    for (const auto& f : base.functions()) {
      const unsigned a = f.arity();
      if (a == 0)
        continue;
      args.assign(a, 0);
      pick.assign(a, 0);
      // Every tuple with at least one frontier member, counted once by the
      // position p of its first frontier entry.
      for (unsigned p = 0; p < a; ++p) {
        auto lo = [&](unsigned q) { return q == p ? frontier : std::size_t{0}; };
        auto hi = [&](unsigned q) { return q < p ? frontier : end; };
        bool empty = false;
        for (unsigned q = 0; q < a; ++q) {
          if (lo(q) >= hi(q))
            empty = true;
          pick[q] = lo(q);
        }
        if (empty)
          continue;
        while (true) {
          for (unsigned q = 0; q < a; ++q)
            args[q] = members[pick[q]];
          if (admit(apply_lanes(f, args) & mask))
            return true;
          unsigned q = 0;
          while (q < a && ++pick[q] == hi(q)) {
            pick[q] = lo(q);
            ++q;
          }
          if (q == a)
            break;
        }
      }
    }
    frontier = end;
  }
  return false;
}

} // namespace

bool closure_until(const Base& base, unsigned k, const std::function<bool(const BooleanFunction&)>& stop) {
  std::vector<Table> members;
  return run_closure(base, k, members,
                     [&](Table t) { return stop(BooleanFunction({}, k, std::vector<std::uint64_t>{t})); });
}

std::vector<BooleanFunction> closure_fixed_arity(const Base& base, unsigned k) {
  std::vector<Table> members;
  run_closure(base, k, members, [](Table) { return false; });
  std::sort(members.begin(), members.end());
  std::vector<BooleanFunction> out;
  out.reserve(members.size());
  for (Table t : members)
    out.emplace_back(std::string{}, k, std::vector<std::uint64_t>{t});
  return out;
}

bool contains_generator(const Base& base, const BooleanFunction& g) {
  if (g.arity() > max_closure_arity)
    throw Error("generator '" + g.name() + "' has arity " + std::to_string(g.arity()) + ", at most " +
                std::to_string(max_closure_arity) + " supported");
  const unsigned k = std::max(1U, g.arity());
  const Table target = g.arity() == 0 ? (g.at(0) ? Table{3} : Table{0}) : g.words()[0];
  std::vector<Table> members;
  return run_closure(base, k, members, [&](Table t) { return t == target; });
}

std::vector<NamedBase> standard_bases() {
  using namespace connectives;
  auto b = [](std::vector<BooleanFunction> fs) { return make_base(std::move(fs)); };
  return {
      {"BF", b({conjunction(), negation()})},
      {"M2", b({disjunction(), conjunction()})},
      {"S00", b({or_and()})},
      {"S10", b({and_or()})},
      {"D2", b({majority()})},
      {"L", b({exclusive_or(), top()})},
      {"L2", b({xor3()})},
      {"V", b({disjunction(), bot(), top()})},
      {"E", b({conjunction(), bot(), top()})},
      {"N", b({negation(), top()})},
      {"N2", b({negation()})},
  };
}

} // namespace postimp
