#include "postimp/decide.hpp"

#include "postimp/error.hpp"
#include "postimp/gf2.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <map>
#include <thread>

namespace postimp {

std::string format_assignment(const std::vector<std::string>& variables, const std::vector<bool>& sigma) {
  std::string out;
  for (std::size_t i = 0; i < variables.size() && i < sigma.size(); ++i) {
    if (!out.empty())
      out += ' ';
    out += variables[i] + "=" + (sigma[i] ? "1" : "0");
  }
  return out;
}

bool is_counterexample(const Instance& instance, const std::vector<bool>& sigma) {
  for (const auto& p : instance.premises())
    if (!evaluate(p, sigma))
      return false;
  return !evaluate(instance.conclusion(), sigma);
}

namespace {

Decision refuted(Fragment fragment, const Instance& instance, std::vector<bool> sigma, std::string why) {
  Decision d{false, fragment, std::move(why), std::move(sigma)};
  d.detail += "; counterexample " + format_assignment(instance.variables(), *d.counterexample);
  return d;
}

Decision proved(Fragment fragment, std::string why) { return {true, fragment, std::move(why), std::nullopt}; }

// ---------------------------------------------------------------- oracle

constexpr std::uint64_t lane_pattern(unsigned variable) {
  std::uint64_t p = 0;
  for (unsigned k = 0; k < 64; ++k)
    if ((k >> variable) & 1U)
      p |= std::uint64_t{1} << k;
  return p;
}

constexpr std::uint64_t no_counterexample = std::numeric_limits<std::uint64_t>::max();

class OracleScan {
public:
  explicit OracleScan(const Instance& instance) : n_(instance.num_variables()), block_(n_) {
    for (const auto& p : instance.premises())
      premises_.emplace_back(p);
    conclusion_.emplace(instance.conclusion());
    valid_ = n_ >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (std::size_t{1} << n_)) - 1;
    for (std::size_t i = 0; i < n_ && i < 6; ++i)
      block_[i] = lane_pattern(static_cast<unsigned>(i));
  }

  /// Lowest counterexample index in blocks [first, last), stopping early once
  /// `bound` (a block index) is passed.
  std::uint64_t scan(std::uint64_t first, std::uint64_t last, const std::atomic<std::uint64_t>& bound) {
    for (std::uint64_t b = first; b < last; ++b) {
      if (b > bound.load(std::memory_order_relaxed))
        break;
      for (std::size_t i = 6; i < n_; ++i)
        block_[i] = ((b >> (i - 6)) & 1U) ? ~std::uint64_t{0} : 0;
      std::uint64_t live = valid_;
      for (auto& p : premises_) {
        live &= p(block_);
        if (!live)
          break;
      }
      if (!live)
        continue;
      const std::uint64_t bad = live & ~(*conclusion_)(block_);
      if (bad)
        return b * 64 + static_cast<std::uint64_t>(std::countr_zero(bad));
    }
    return no_counterexample;
  }

private:
  std::size_t n_;
  std::vector<std::uint64_t> block_;
  std::vector<BlockEvaluator> premises_;
  std::optional<BlockEvaluator> conclusion_;
  std::uint64_t valid_;
};

} // namespace

Decision decide_oracle(const Instance& instance, const OracleOptions& options) {
  const std::size_t n = instance.num_variables();
  if (n > options.max_variables)
    throw VariableCapError(n, options.max_variables);
  if (n >= 64)
    throw VariableCapError(n, 63);

  const std::uint64_t blocks = n <= 6 ? 1 : std::uint64_t{1} << (n - 6);
  unsigned threads = options.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : options.threads;
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, blocks));

  std::atomic<std::uint64_t> best_block{no_counterexample};
  std::uint64_t best = no_counterexample;
  if (threads <= 1) {
    OracleScan scan(instance);
    best = scan.scan(0, blocks, best_block);
  } else {
    // Contiguous chunks; the lowest index found by any worker wins, so the
    // report matches the sequential scan.
    std::vector<std::uint64_t> found(threads, no_counterexample);
    {
      std::vector<std::jthread> workers;
      const std::uint64_t chunk = (blocks + threads - 1) / threads;
      for (unsigned w = 0; w < threads; ++w) {
        workers.emplace_back([&, w] {
          const std::uint64_t first = w * chunk;
          const std::uint64_t last = std::min(blocks, first + chunk);
          OracleScan scan(instance);
          found[w] = scan.scan(first, last, best_block);
          if (found[w] != no_counterexample) {
            std::uint64_t block = found[w] / 64;
            std::uint64_t current = best_block.load();
            while (block < current && !best_block.compare_exchange_weak(current, block)) {
            }
          }
        });
      }
    }
    best = *std::min_element(found.begin(), found.end());
  }

  const std::string scanned = "enumerated " + std::to_string(std::uint64_t{1} << n) + " assignments";
  if (best == no_counterexample)
    return proved(Fragment::General, scanned + ", none refutes the implication");
  std::vector<bool> sigma(n);
  for (std::size_t i = 0; i < n; ++i)
    sigma[i] = (best >> i) & 1U;
  return refuted(Fragment::General, instance, std::move(sigma),
                 "assignment #" + std::to_string(best) + " satisfies the premises but not the conclusion");
}

// ---------------------------------------------------------------- linear

Decision decide_linear(const Instance& instance) {
  const std::size_t n = instance.num_variables();
  const std::size_t t = n; // the fresh variable of "premises + {conclusion xor t, t}"
  gf2::System system(n + 1);
  auto add = [&](const LinearForm& form, bool with_t) {
    gf2::Row row(n + 1, !form.constant);
    for (std::size_t i = 0; i < n; ++i)
      if (form.coefficients[i])
        row.set(i);
    if (with_t)
      row.set(t);
    system.add(std::move(row));
  };
  for (const auto& p : instance.premises())
    add(extract_linear_nf(p), false);
  add(extract_linear_nf(instance.conclusion()), true);
  gf2::Row t_row(n + 1, true);
  t_row.set(t);
  system.add(std::move(t_row));

  const auto echelon = gf2::eliminate(system);
  const std::string shape = std::to_string(system.size()) + " equations over " + std::to_string(n + 1) +
                            " unknowns, rank " + std::to_string(echelon.rank);
  if (!echelon.consistent)
    return proved(Fragment::Linear, "linear system (" + shape + ") is inconsistent");
  auto x = *gf2::solve(system);
  x.resize(n);
  return refuted(Fragment::Linear, instance, std::move(x), "linear system (" + shape + ") is solvable");
}

// ---------------------------------------------------------------- V and E

Decision decide_or_fragment(const Instance& instance) {
  const std::size_t n = instance.num_variables();
  const OrForm goal = extract_or_nf(instance.conclusion());
  if (goal.constant)
    return proved(Fragment::Or, "conclusion is constant true");
  const auto& premises = instance.premises();
  for (std::size_t k = 0; k < premises.size(); ++k) {
    const OrForm p = extract_or_nf(premises[k]);
    bool dominated = p.constant <= goal.constant;
    for (std::size_t i = 0; i < n && dominated; ++i)
      dominated = p.coefficients[i] <= goal.coefficients[i];
    if (dominated)
      return proved(Fragment::Or, "premise #" + std::to_string(k + 1) + " has coefficients below the conclusion's");
  }
  // Falsify the conclusion's variables and raise every other one.
  std::vector<bool> sigma(n);
  for (std::size_t i = 0; i < n; ++i)
    sigma[i] = !goal.coefficients[i];
  return refuted(Fragment::Or, instance, std::move(sigma), "no premise is dominated by the conclusion");
}

Decision decide_and_fragment(const Instance& instance) {
  const std::size_t n = instance.num_variables();
  const AndForm goal = extract_and_nf(instance.conclusion());
  std::vector<bool> supplied(n, false);
  const auto& premises = instance.premises();
  for (std::size_t k = 0; k < premises.size(); ++k) {
    const AndForm p = extract_and_nf(premises[k]);
    if (!p.constant)
      return proved(Fragment::And, "premise #" + std::to_string(k + 1) + " is constant false");
    for (std::size_t i = 0; i < n; ++i)
      if (p.coefficients[i])
        supplied[i] = true;
  }
  std::vector<bool> sigma(n, true);
  if (!goal.constant)
    return refuted(Fragment::And, instance, std::move(sigma), "conclusion is constant false");
  for (std::size_t i = 0; i < n; ++i) {
    if (goal.coefficients[i] && !supplied[i]) {
      sigma[i] = false;
      return refuted(Fragment::And, instance, std::move(sigma),
                     "conclusion variable '" + instance.variables()[i] + "' occurs in no premise");
    }
  }
  return proved(Fragment::And, "every conclusion variable is conjoined by some premise");
}

// ---------------------------------------------------------------- unary

Decision decide_unary_fragment(const Instance& instance) {
  const std::size_t n = instance.num_variables();
  std::map<std::size_t, bool> literals;
  const auto& premises = instance.premises();
  for (std::size_t k = 0; k < premises.size(); ++k) {
    const UnaryForm u = extract_unary_nf(premises[k]);
    if (u.is_constant()) {
      if (!u.value)
        return proved(Fragment::Unary, "premise #" + std::to_string(k + 1) + " is constant false");
      continue;
    }
    auto [it, inserted] = literals.emplace(u.variable, u.value);
    if (!inserted && it->second != u.value)
      return proved(Fragment::Unary, "premises contain complementary literals on '" + instance.variables()[u.variable] + "'");
  }

  std::vector<bool> sigma(n, false);
  for (auto [v, positive] : literals)
    sigma[v] = positive;

  const UnaryForm goal = extract_unary_nf(instance.conclusion());
  if (goal.is_constant()) {
    if (goal.value)
      return proved(Fragment::Unary, "conclusion is constant true");
    return refuted(Fragment::Unary, instance, std::move(sigma), "conclusion is constant false");
  }
  auto it = literals.find(goal.variable);
  if (it != literals.end() && it->second == goal.value)
    return proved(Fragment::Unary, "conclusion literal occurs among the premises");
  if (it == literals.end())
    sigma[goal.variable] = !goal.value;
  return refuted(Fragment::Unary, instance, std::move(sigma), "conclusion literal does not occur among the premises");
}

// ---------------------------------------------------------------- single premise

bool single_linear_rule(const LinearForm& premise, const LinearForm& conclusion) {
  auto no_variables = [](const LinearForm& f) {
    return std::none_of(f.coefficients.begin(), f.coefficients.end(), [](bool c) { return c; });
  };
  if (!premise.constant && no_variables(premise))
    return true;
  if (conclusion.constant && no_variables(conclusion))
    return true;
  return premise == conclusion;
}

Decision decide_single_linear(const Formula& premise, const Formula& conclusion) {
  const Instance instance(premise.base_ptr(), {premise}, conclusion);
  const LinearForm p = extract_linear_nf(instance.premises().front());
  const LinearForm c = extract_linear_nf(instance.conclusion());
  if (single_linear_rule(p, c))
    return proved(Fragment::LinearSingleton, "premise is constant false, conclusion is constant true, or the two "
                                             "have identical linear normal forms");

  const std::size_t n = instance.num_variables();
  gf2::System system(n);
  system.add(gf2::Row(p.coefficients, !p.constant));
  system.add(gf2::Row(c.coefficients, c.constant));
  auto x = gf2::solve(system);
  Decision d{false, Fragment::LinearSingleton, "linear normal forms differ and neither side is constant", x};
  if (x)
    d.detail += "; counterexample " + format_assignment(instance.variables(), *x);
  return d;
}

// ---------------------------------------------------------------- dispatch

Decision dispatch(const Instance& instance, PremiseMode mode, std::optional<Fragment> force,
                  const OracleOptions& options) {
  if (mode == PremiseMode::Single && instance.premises().size() != 1)
    throw Error("single-premise mode needs exactly one premise, got " + std::to_string(instance.premises().size()));

  Fragment fragment = force ? *force
                            : (mode == PremiseMode::Single ? classify_base_single_premise(instance.base())
                                                           : classify_base(instance.base()))
                                  .fragment;
  if (fragment == Fragment::Linear && mode == PremiseMode::Single)
    fragment = Fragment::LinearSingleton;

  switch (fragment) {
  case Fragment::General:
    return decide_oracle(instance, options);
  case Fragment::Linear:
    return decide_linear(instance);
  case Fragment::LinearSingleton:
    if (instance.premises().size() != 1)
      throw Error("the singleton linear decider needs exactly one premise");
    return decide_single_linear(instance.premises().front(), instance.conclusion());
  case Fragment::Or:
  case Fragment::Trivial:
    return decide_or_fragment(instance);
  case Fragment::And:
    return decide_and_fragment(instance);
  case Fragment::Unary:
    return decide_unary_fragment(instance);
  }
  throw Error("unknown fragment");
}

Decision decide_equivalence(const Formula& lhs, const Formula& rhs, const OracleOptions& options) {
  const Instance forward(lhs.base_ptr(), {lhs}, rhs);
  Decision there = dispatch(forward, PremiseMode::Single, std::nullopt, options);
  if (!there.implies) {
    there.detail = "left does not entail right: " + there.detail;
    return there;
  }
  const Instance backward(rhs.base_ptr(), {rhs}, lhs);
  Decision back = dispatch(backward, PremiseMode::Single, std::nullopt, options);
  if (!back.implies) {
    back.detail = "right does not entail left: " + back.detail;
    if (back.counterexample) {
      // Report over the forward variable order.
      std::vector<bool> sigma(forward.num_variables(), false);
      for (std::size_t i = 0; i < backward.num_variables(); ++i) {
        const auto& name = backward.variables()[i];
        auto at = std::find(forward.variables().begin(), forward.variables().end(), name);
        sigma[static_cast<std::size_t>(at - forward.variables().begin())] = (*back.counterexample)[i];
      }
      back.counterexample = std::move(sigma);
    }
    return back;
  }
  return {true, there.fragment_used, "formulae entail each other", std::nullopt};
}

} // namespace postimp
