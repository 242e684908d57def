#pragma once

// Deciders for "do the premises entail the conclusion?": an exhaustive
// bit-sliced oracle for arbitrary bases and polynomial procedures for the
// linear, disjunctive, conjunctive and unary fragments.

#include "postimp/classify.hpp"
#include "postimp/formula.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace postimp {

struct Decision {
  bool implies = false;
  Fragment fragment_used = Fragment::General;
  std::string detail;
  /// An assignment over the instance variables satisfying every premise and
  /// falsifying the conclusion. Present whenever implies is false.
  std::optional<std::vector<bool>> counterexample;
};

struct OracleOptions {
  std::size_t max_variables = 24;
  /// Worker threads for the enumeration; 0 picks the hardware concurrency.
  unsigned threads = 1;
};

/// Enumerates all 2^n assignments, 64 per machine word. Reports the
/// counterexample with the lowest assignment index (variable 0 is the
/// least-significant bit). Throws VariableCapError above the cap.
Decision decide_oracle(const Instance& instance, const OracleOptions& options = {});

/// Premises and the negated conclusion as a linear system over Z_2; the
/// implication holds iff that system is inconsistent.
Decision decide_linear(const Instance& instance);

/// Dominance of disjunctive normal forms.
Decision decide_or_fragment(const Instance& instance);

/// The order dual: some premise is constant false, or the conclusion's
/// variables are all supplied by the premises.
Decision decide_and_fragment(const Instance& instance);

/// Premises and conclusion reduced to constants and literals.
Decision decide_unary_fragment(const Instance& instance);

/// Single linear premise: implies iff the premise is constant false, the
/// conclusion is constant true, or both have identical coefficients.
Decision decide_single_linear(const Formula& premise, const Formula& conclusion);

/// The same rule on normal forms of equal width.
bool single_linear_rule(const LinearForm& premise, const LinearForm& conclusion);

enum class PremiseMode { Set, Single };

/// Classifies the base and routes to the matching decider. `force` bypasses
/// the classification; the forced decider throws FragmentError when its
/// precondition fails.
Decision dispatch(const Instance& instance, PremiseMode mode = PremiseMode::Set,
                  std::optional<Fragment> force = std::nullopt, const OracleOptions& options = {});

/// Both singleton-premise implications, each through dispatch.
Decision decide_equivalence(const Formula& lhs, const Formula& rhs, const OracleOptions& options = {});

/// Whether sigma satisfies every premise and falsifies the conclusion.
bool is_counterexample(const Instance& instance, const std::vector<bool>& sigma);

/// `x=0 y=1` style rendering over the instance variables.
std::string format_assignment(const std::vector<std::string>& variables, const std::vector<bool>& sigma);

} // namespace postimp
