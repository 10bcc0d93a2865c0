#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dataset.hpp"
#include "format.hpp"
#include "scenario.hpp"
#include "varbelief/varbelief.hpp"

namespace vbcli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitNotConverged = 3;

// "a:b:n" -> n evenly spaced points from a to b inclusive (just a when n = 1).
std::vector<double> parse_grid(const std::string& text, const std::string& flag) {
  const auto first = text.find(':');
  const auto second = text.find(':', first == std::string::npos ? first : first + 1);
  if (first == std::string::npos || second == std::string::npos) {
    throw std::invalid_argument(flag + ": expected a:b:n, got '" + text + "'");
  }
  double a = 0.0, b = 0.0;
  long n = 0;
  try {
    a = std::stod(text.substr(0, first));
    b = std::stod(text.substr(first + 1, second - first - 1));
    n = std::stol(text.substr(second + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument(flag + ": expected a:b:n, got '" + text + "'");
  }
  if (n < 1) {
    throw std::invalid_argument(flag + ": grid needs at least one point");
  }
  std::vector<double> points;
  points.reserve(static_cast<std::size_t>(n));
  if (n == 1) {
    points.push_back(a);
  } else {
    const double step = (b - a) / static_cast<double>(n - 1);
    for (long i = 0; i < n; ++i) {
      points.push_back(a + step * static_cast<double>(i));
    }
  }
  return points;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::string item;
  for (char c : text) {
    if (c == ',') {
      items.push_back(item);
      item.clear();
    } else {
      item.push_back(c);
    }
  }
  items.push_back(item);
  return items;
}

void print_posterior(const varbelief::Distribution& q) {
  std::cout << "state,probability\n";
  for (std::size_t s = 0; s < q.size(); ++s) {
    std::cout << q.space().label(s) << ',' << fmt12(q[s]) << "\n";
  }
}

varbelief::Distribution posterior_under_rule(const Scenario& scenario) {
  switch (scenario.rule.kind) {
    case RuleSpec::Kind::bayes:
      return varbelief::bayes_update(scenario.prior, scenario.experiment,
                                     scenario.signal_index);
    case RuleSpec::Kind::exponential:
      return varbelief::exponential_update(scenario.prior, scenario.experiment,
                                           scenario.signal_index,
                                           {scenario.rule.alpha, scenario.rule.beta});
    case RuleSpec::Kind::variational: {
      varbelief::ObjectiveSpec spec(scenario.prior, scenario.experiment, scenario.signal_index,
                                    {scenario.rule.lambda, scenario.rule.mu});
      return varbelief::variational_update(spec).posterior;
    }
  }
  throw std::logic_error("unreachable rule kind");
}

int cmd_update(const std::string& scenario_path) {
  const Scenario scenario = parse_scenario(scenario_path);
  print_posterior(posterior_under_rule(scenario));
  return kExitOk;
}

int cmd_solve(const std::string& scenario_path, std::optional<double> tol,
              std::optional<long> max_iter) {
  const Scenario scenario = parse_scenario(scenario_path);
  const auto prefs = preferences_from_rule(scenario.rule);
  varbelief::ObjectiveSpec spec(scenario.prior, scenario.experiment, scenario.signal_index,
                                prefs);
  varbelief::SolverConfig config;
  if (tol) config.convergence_tol = *tol;
  if (max_iter) {
    if (*max_iter < 1) throw std::invalid_argument("solve: --max-iter must be at least 1");
    config.max_iterations = static_cast<std::size_t>(*max_iter);
  }

  const auto outcome = varbelief::variational_update(spec, config);
  print_posterior(outcome.posterior);
  std::cout << "\n";
  std::cout << "regime," << (prefs.mu < 1.0 ? "convex" : "concave") << "\n";
  std::cout << "iterations," << outcome.report.iterations << "\n";
  std::cout << "converged," << (outcome.report.converged ? "true" : "false") << "\n";
  std::cout << "final_objective," << fmt12(outcome.report.final_objective) << "\n";
  if (prefs.mu < 1.0) {
    const auto check = varbelief::crosscheck(spec, config);
    std::cout << "sup_gap_to_closed_form," << fmt12(*check.sup_gap_to_closed_form) << "\n";
  }
  return outcome.report.converged ? kExitOk : kExitNotConverged;
}

int cmd_sweep(const std::string& scenario_path, const std::string& lambda_grid,
              const std::string& mu_grid) {
  const Scenario scenario = parse_scenario(scenario_path);
  const auto lambdas = parse_grid(lambda_grid, "--lambda");
  const auto mus = parse_grid(mu_grid, "--mu");

  std::cout << "lambda,mu,regime";
  for (std::size_t s = 0; s < scenario.space->size(); ++s) {
    std::cout << ",q_" << scenario.space->label(s);
  }
  std::cout << ",entropy\n";

  for (double lambda : lambdas) {    // lambda-major row order
    for (double mu : mus) {
      varbelief::ObjectiveSpec spec(scenario.prior, scenario.experiment, scenario.signal_index,
                                    {lambda, mu});
      const auto outcome = varbelief::variational_update(spec);
      std::cout << fmt12(lambda) << ',' << fmt12(mu) << ','
                << (mu < 1.0 ? "convex" : "concave");
      for (std::size_t s = 0; s < outcome.posterior.size(); ++s) {
        std::cout << ',' << fmt12(outcome.posterior[s]);
      }
      std::cout << ',' << fmt12(varbelief::entropy(outcome.posterior)) << "\n";
    }
  }
  return kExitOk;
}

int cmd_sequence(const std::string& scenario_path, const std::string& signal_list,
                 long max_permutations) {
  const Scenario scenario = parse_scenario(scenario_path);
  if (max_permutations < 1) {
    throw std::invalid_argument("sequence: --permutations must be at least 1");
  }
  const auto rule = exponents_from_rule(scenario.rule);
  varbelief::SignalSequence seq(scenario.experiment, split_list(signal_list));

  print_posterior(varbelief::sequential_update(scenario.prior, seq, rule));
  std::cout << "\n";
  const double tv = varbelief::order_dependence(scenario.prior, seq, rule,
                                                static_cast<std::size_t>(max_permutations));
  std::cout << "order_dependence_tv," << fmt12(tv) << "\n";
  return kExitOk;
}

int cmd_estimate(const std::string& data_path) {
  std::ifstream file(data_path);
  if (!file) {
    throw DatasetError("dataset: cannot open file '" + data_path + "'");
  }
  const auto observations = read_dataset(file);
  const auto fit = varbelief::grether_fit(observations);
  std::cout << "alpha_hat," << fmt12(fit.alpha_hat) << "\n";
  std::cout << "beta_hat," << fmt12(fit.beta_hat) << "\n";
  std::cout << "residual_sum_squares," << fmt12(fit.residual_sum_squares) << "\n";
  std::cout << "n_equations," << fit.n_equations << "\n";
  if (fit.implied_prefs) {
    std::cout << "lambda," << fmt12(fit.implied_prefs->lambda) << "\n";
    std::cout << "mu," << fmt12(fit.implied_prefs->mu) << "\n";
  }
  return kExitOk;
}

int cmd_simulate(const std::string& scenario_path, double alpha, double beta, long n,
                 std::uint64_t seed, double noise, const std::string& out_path) {
  const Scenario scenario = parse_scenario(scenario_path);
  if (n < 1) {
    throw std::invalid_argument("simulate: --n must be at least 1");
  }
  const varbelief::ExponentParams params(alpha, beta);
  const auto observations = varbelief::simulate_dataset(
      seed, scenario.experiment, params, static_cast<std::size_t>(n), noise);

  std::ofstream out(out_path);
  if (!out) {
    throw DatasetError("dataset: cannot open output file '" + out_path + "'");
  }
  DatasetMeta meta;
  meta.seed = seed;
  meta.alpha = alpha;
  meta.beta = beta;
  meta.n = static_cast<std::size_t>(n);
  meta.noise = noise;
  write_dataset(out, observations, meta);
  return kExitOk;
}

}  // namespace

int run_command(int argc, const char* const* argv) {
  CLI::App app{"Belief updating rules, variational solvers and estimation"};
  app.require_subcommand(1);

  std::string scenario_path, data_path, out_path, lambda_grid, mu_grid, signal_list;
  double alpha = 0.0, beta = 0.0, noise = 0.0;
  std::optional<double> tol;
  std::optional<long> max_iter;
  long n = 0, max_permutations = 120;
  std::uint64_t seed = 0;

  auto* update = app.add_subcommand("update", "Posterior under the scenario's rule");
  update->add_option("--scenario", scenario_path, "Scenario JSON file")->required();

  auto* solve = app.add_subcommand(
      "solve", "Minimize the variational objective numerically and cross-check");
  solve->add_option("--scenario", scenario_path, "Scenario JSON file")->required();
  solve->add_option("--tol", tol, "Convergence tolerance (sup-norm iterate change)");
  solve->add_option("--max-iter", max_iter, "Iteration budget");

  auto* sweep = app.add_subcommand("sweep", "Posterior over a (lambda, mu) grid");
  sweep->add_option("--scenario", scenario_path, "Scenario JSON file")->required();
  sweep->add_option("--lambda", lambda_grid, "Lambda grid a:b:n")->required();
  sweep->add_option("--mu", mu_grid, "Mu grid c:d:m")->required();

  auto* sequence = app.add_subcommand("sequence", "Fold a signal sequence and measure order dependence");
  sequence->add_option("--scenario", scenario_path, "Scenario JSON file")->required();
  sequence->add_option("--signals", signal_list, "Comma-separated signal labels")->required();
  sequence->add_option("--permutations", max_permutations, "Permutation budget (default 120)");

  auto* estimate = app.add_subcommand("estimate", "Fit (alpha, beta) to a dataset CSV");
  estimate->add_option("--data", data_path, "Dataset CSV file")->required();

  auto* simulate = app.add_subcommand("simulate", "Write a simulated dataset CSV");
  simulate->add_option("--scenario", scenario_path, "Scenario JSON file (states and likelihood)")
      ->required();
  simulate->add_option("--alpha", alpha, "True prior exponent")->required();
  simulate->add_option("--beta", beta, "True evidence exponent")->required();
  simulate->add_option("--n", n, "Number of observations")->required();
  simulate->add_option("--seed", seed, "RNG seed")->required();
  simulate->add_option("--noise", noise, "Log-ratio noise standard deviation (default 0)");
  simulate->add_option("--out", out_path, "Output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help
    }
    std::cerr << e.what() << "\n\n" << app.help() << std::flush;
    return kExitUsage;
  }

  try {
    if (update->parsed()) return cmd_update(scenario_path);
    if (solve->parsed()) return cmd_solve(scenario_path, tol, max_iter);
    if (sweep->parsed()) return cmd_sweep(scenario_path, lambda_grid, mu_grid);
    if (sequence->parsed()) return cmd_sequence(scenario_path, signal_list, max_permutations);
    if (estimate->parsed()) return cmd_estimate(data_path);
    if (simulate->parsed()) return cmd_simulate(scenario_path, alpha, beta, n, seed, noise, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace vbcli
