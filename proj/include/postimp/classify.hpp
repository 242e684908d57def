#pragma once

// Complexity verdicts for the implication problem over a base, and a
// bounded-arity clone closure engine used to cross-check them.

#include "postimp/boolfn.hpp"
#include "postimp/formula.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace postimp {

enum class ComplexityClass { CoNPComplete, ParityLComplete, AC0Mod2, AC0 };

/// The decision procedure a verdict routes to.
enum class Fragment { General, Linear, LinearSingleton, Or, And, Unary, Trivial };

std::string_view to_string(ComplexityClass c);
std::string_view to_string(Fragment f);

struct ImpComplexity {
  ComplexityClass complexity;
  Fragment fragment;
  std::string witness;
};

/// Verdict for IMP(B), premises given as a set.
ImpComplexity classify_base(const Base& base);

/// Verdict for IMP'(B), exactly one premise. Differs from classify_base
/// only on linear bases, which drop to AC0[2].
ImpComplexity classify_base_single_premise(const Base& base);

inline constexpr unsigned max_closure_arity = 4;

/// All k-ary functions expressible by B-formulae over k fixed variables,
/// sorted by truth table. 0-ary base functions enter as constant k-ary
/// functions. Requires 1 <= k <= 4.
std::vector<BooleanFunction> closure_fixed_arity(const Base& base, unsigned k);

/// Whether g lies in the clone generated by the base. Stops as soon as g
/// appears in the closure at arity max(1, arity(g)).
bool contains_generator(const Base& base, const BooleanFunction& g);

/// Closure search that stops once `stop` accepts a member. Returns true if
/// it stopped early.
bool closure_until(const Base& base, unsigned k, const std::function<bool(const BooleanFunction&)>& stop);

/// A clone of the classification table with its standard base.
struct NamedBase {
  std::string clone;
  BasePtr base;
};

/// BF, M2, S00, S10, D2, L, L2, V, E, N, N2 with their canonical bases.
std::vector<NamedBase> standard_bases();

} // namespace postimp
