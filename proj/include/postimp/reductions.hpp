#pragma once

// Hardness constructions: maps from TAUT-DNF, Z_2 linear systems and MOD_2
// into implication instances over the standard clone bases.

#include "postimp/formula.hpp"
#include "postimp/gf2.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace postimp {

struct Literal {
  std::size_t variable = 0; // 0-based; rendered as x<variable+1>
  bool positive = true;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

/// A DNF over variables x1..xk: a disjunction of conjunctions of literals.
struct Dnf {
  std::size_t num_variables = 0;
  std::vector<std::vector<Literal>> terms;
};

/// Sorts and deduplicates each term's literals and drops terms holding a
/// variable in both polarities. If that would drop every term, one such
/// term is kept so the DNF stays non-empty (it is still unsatisfiable).
Dnf normalize(const Dnf& dnf);

/// Brute-force tautology check over 2^k assignments.
bool is_tautology(const Dnf& dnf);

/// Bases the constructions emit into.
BasePtr monotone_base(); // {and, or}
BasePtr majority_base(); // {maj}
BasePtr xor3_base();     // {xor3}
BasePtr negation_base(); // {not}

/// psi1 = AND_i (x_i or y_i) over the variables occurring in the DNF,
/// psi2 = the DNF with each negative literal not-x_l replaced by y_l. Chains
/// are balanced binary trees. The instance is {psi1} |= psi2, which holds
/// iff the DNF is a tautology.
Instance reduce_tautdnf_monotone(const Dnf& dnf);

/// As above over {maj}: x and y becomes maj(x, y, f), x or y becomes
/// maj(x, y, t). Premise maj(psi1', t, f), conclusion
/// maj(maj(psi1', psi2', f), t, f).
Instance reduce_tautdnf_d2(const Dnf& dnf);

struct LinsysReduction {
  Instance instance;
  std::string goal; // the padding variable; the instance conclusion
};

/// Each row becomes c' xor (xor of its unknowns) with the constant 1
/// replaced by t and even-sized formulae padded with f, written as a left
/// fold of xor3; premises also contain t. The system is solvable iff the
/// premises do not entail f.
LinsysReduction reduce_linsys_to_imp(const gf2::System& system);

/// Premise t, conclusion not^{w1} ... not^{wn} (not t). Entailed iff w has
/// an odd number of ones.
Instance reduce_mod2_unary(std::string_view w);

/// Premise t, conclusion h(w) with h("") = f, h(0y) = h(y),
/// h(1y) = xor3(t, f, h(y)). Entailed iff w has an odd number of ones.
Instance reduce_mod2_single_linear(std::string_view w);

} // namespace postimp
