#include "varbelief/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "varbelief/numeric.hpp"
#include "varbelief/updating.hpp"

namespace varbelief {

namespace {

void check_config(const SolverConfig& config) {
  if (config.step_size && (!std::isfinite(*config.step_size) || *config.step_size <= 0.0)) {
    throw std::invalid_argument("SolverConfig: step_size must be positive");
  }
  if (config.max_iterations == 0) {
    throw std::invalid_argument("SolverConfig: max_iterations must be positive");
  }
  if (!std::isfinite(config.convergence_tol) || config.convergence_tol <= 0.0) {
    throw std::invalid_argument("SolverConfig: convergence_tol must be positive");
  }
}

Distribution embed_feasible(const ObjectiveSpec& spec, std::span<const double> feasible_mass) {
  std::vector<double> full(spec.prior().size(), 0.0);
  const auto& feasible = spec.feasible_states();
  for (std::size_t j = 0; j < feasible.size(); ++j) {
    full[feasible[j]] = feasible_mass[j];
  }
  return {spec.prior().space_ptr(), std::move(full)};
}

}  // namespace

SolveOutcome solve_convex(const ObjectiveSpec& spec, const SolverConfig& config,
                          const IterateCallback& on_iterate) {
  check_config(config);
  const double mu = spec.prefs().mu;
  if (mu >= 1.0) {
    throw std::domain_error("solve_convex: requires mu < 1 (use solve_concave)");
  }
  const double lambda = spec.prefs().lambda;
  const double one_minus_mu = 1.0 - mu;
  const double eta = config.step_size.value_or(0.5 / std::max(1.0, std::abs(one_minus_mu)));

  const auto& feasible = spec.feasible_states();
  const std::size_t k = feasible.size();
  std::vector<double> log_prior(k), log_lik(k);
  for (std::size_t j = 0; j < k; ++j) {
    log_prior[j] = std::log(spec.prior()[feasible[j]]);
    log_lik[j] = std::log(spec.experiment().likelihood(feasible[j], spec.signal()));
  }

  // Iterate in log space; the masses themselves are only materialized for
  // the stopping test, so equilibrium masses below double range stay at 0
  // without poisoning the recursion.
  std::vector<double> log_q(k, -std::log(static_cast<double>(k)));
  std::vector<double> q_prev(k, 1.0 / static_cast<double>(k));
  std::vector<double> q_cur(k);

  SolverReport report;
  for (std::size_t iter = 1; iter <= config.max_iterations; ++iter) {
    for (std::size_t j = 0; j < k; ++j) {
      const double gradient =
          one_minus_mu * log_q[j] - log_prior[j] - lambda * log_lik[j] + one_minus_mu;
      log_q[j] -= eta * gradient;
    }
    const double lse = log_sum_exp(log_q);
    for (double& l : log_q) l -= lse;

    double delta = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      q_cur[j] = std::exp(log_q[j]);
      delta = std::max(delta, std::abs(q_cur[j] - q_prev[j]));
    }
    std::swap(q_cur, q_prev);
    report.iterations = iter;
    if (on_iterate) on_iterate(embed_feasible(spec, q_prev));
    if (delta < config.convergence_tol) {
      report.converged = true;
      break;
    }
  }

  // Renormalize exactly before constructing the result.
  double sum = 0.0;
  for (double m : q_prev) sum += m;
  for (double& m : q_prev) m /= sum;
  Distribution posterior = embed_feasible(spec, q_prev);
  report.final_objective = objective_value(posterior, spec);
  return {std::move(posterior), report};
}

ConcaveSolution solve_concave(const ObjectiveSpec& spec) {
  const double mu = spec.prefs().mu;
  if (mu < 1.0) {
    throw std::domain_error("solve_concave: requires mu >= 1 (use solve_convex)");
  }
  const double lambda = spec.prefs().lambda;
  const auto& feasible = spec.feasible_states();

  std::vector<double> score(feasible.size());
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < feasible.size(); ++j) {
    const std::size_t s = feasible[j];
    score[j] = std::log(spec.prior()[s]) +
               lambda * std::log(spec.experiment().likelihood(s, spec.signal()));
    best = std::max(best, score[j]);
  }

  // Relative tie tolerance 1e-12 on p f^lambda, i.e. a 1e-12 gap in log score.
  constexpr double kTieTolerance = 1e-12;
  std::vector<std::size_t> maximizers;
  for (std::size_t j = 0; j < feasible.size(); ++j) {
    if (score[j] >= best - kTieTolerance) maximizers.push_back(feasible[j]);
  }

  Distribution canonical = Distribution::dirac(spec.prior().space_ptr(), maximizers.front());
  const double value = objective_value(canonical, spec);
  return {std::move(maximizers), std::move(canonical), value};
}

SolveOutcome variational_update(const ObjectiveSpec& spec, const SolverConfig& config) {
  if (spec.prefs().mu < 1.0) {
    return solve_convex(spec, config);
  }
  ConcaveSolution solution = solve_concave(spec);
  SolverReport report;
  report.iterations = 0;
  report.final_objective = solution.objective_value;
  report.converged = true;
  return {std::move(solution.canonical), report};
}

SolverReport crosscheck(const ObjectiveSpec& spec, const SolverConfig& config) {
  SolveOutcome outcome = solve_convex(spec, config);
  const Distribution closed_form =
      exponential_update(spec.prior(), spec.experiment(), spec.signal(),
                         preferences_to_exponents(spec.prefs()));
  double gap = 0.0;
  for (std::size_t s = 0; s < closed_form.size(); ++s) {
    gap = std::max(gap, std::abs(outcome.posterior[s] - closed_form[s]));
  }
  SolverReport report = outcome.report;
  report.sup_gap_to_closed_form = gap;
  return report;
}

}  // namespace varbelief
