#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "varbelief/objective.hpp"

namespace varbelief {

struct SolverConfig {
  // Multiplicative-weights step. Empty means 0.5 / max(1, |1-mu|), which
  // keeps the update stable across the whole mu < 1 range because the
  // gradient's log q coefficient scales with (1-mu).
  std::optional<double> step_size;
  std::size_t max_iterations = 100000;
  // Stop when the sup norm of the iterate change drops below this.
  double convergence_tol = 1e-13;
};

struct SolverReport {
  std::size_t iterations = 0;
  double final_objective = 0.0;
  bool converged = false;
  // Filled by crosscheck: sup-norm distance to the closed-form solution.
  std::optional<double> sup_gap_to_closed_form;
};

struct SolveOutcome {
  Distribution posterior;
  SolverReport report;
};

// Every state in `maximizers` attains the top score p(s) f(x|s)^lambda
// within relative tolerance 1e-12; any mixture of them solves the mu >= 1
// problem. `canonical` is the Dirac on the lowest-index maximizer.
struct ConcaveSolution {
  std::vector<std::size_t> maximizers;
  Distribution canonical;
  double objective_value;
};

// Invoked with each iterate of solve_convex, after normalization. Intended
// for diagnostics (e.g. monitoring objective descent); leave empty otherwise.
using IterateCallback = std::function<void(const Distribution&)>;

// Minimizes the mu < 1 (convex) objective by mirror descent in the entropy
// geometry: q_{t+1}(s) ∝ q_t(s) exp(-eta dF/dq(s)), initialized uniform on
// the feasible support. Infeasible states keep mass exactly 0. Never
// consults the closed-form solution; on budget exhaustion returns the last
// iterate with converged = false rather than throwing.
SolveOutcome solve_convex(const ObjectiveSpec& spec, const SolverConfig& config = {},
                          const IterateCallback& on_iterate = {});

// mu >= 1 regime: the minimum sits on extreme points of the simplex, at
// Diracs on states maximizing p(s) f(x|s)^lambda (scored in log space).
ConcaveSolution solve_concave(const ObjectiveSpec& spec);

// Dispatches on the regime: solve_convex for mu < 1, otherwise the canonical
// Dirac of solve_concave.
SolveOutcome variational_update(const ObjectiveSpec& spec, const SolverConfig& config = {});

// Runs solve_convex, then the closed-form exponential rule with
// alpha = 1/(1-mu), beta = lambda/(1-mu), and reports the sup-norm gap
// between the two routes. The gap is reported, never asserted.
SolverReport crosscheck(const ObjectiveSpec& spec, const SolverConfig& config = {});

}  // namespace varbelief
