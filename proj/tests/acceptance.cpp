// Acceptance suite: each check below exercises one documented guarantee of
// the library end to end, prints a single pass/fail line, and the process
// exits with the number of failures. Every tolerance is pinned here.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "varbelief/varbelief.hpp"

using namespace varbelief;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using CriterionFn = std::function<Outcome()>;

// --- 1. Numerical solver reproduces Bayes at (lambda, mu) = (1, 0). --------
Outcome check_bayes_equivalence() {
  SplitMix64 rng(1001);
  const auto start = std::chrono::steady_clock::now();
  double max_gap = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    auto sc = vbtest::random_scenario(rng, 20, 10);
    const auto reference = bayes_update(sc.prior, sc.experiment, sc.signal);
    const ObjectiveSpec spec(std::move(sc.prior), std::move(sc.experiment), sc.signal,
                             {1.0, 0.0});
    const auto outcome = solve_convex(spec);
    if (!outcome.report.converged) return {false, "solver failed to converge"};
    max_gap = std::max(max_gap, vbtest::sup_distance(outcome.posterior, reference));
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream detail;
  detail << "max sup gap " << max_gap << " over 1000 scenarios in " << seconds << "s";
  return {max_gap <= 1e-8 && seconds < 10.0, detail.str()};
}

// --- 2. Solver matches the tempered closed form p f^lambda at mu = 0. ------
Outcome check_tempered_equivalence() {
  SplitMix64 rng(1002);
  double max_gap = 0.0;
  for (double lambda : {0.25, 0.5, 2.0, 4.0}) {
    for (int trial = 0; trial < 200; ++trial) {
      auto sc = vbtest::random_scenario(rng, 12, 6);
      // Independent route: direct powers, no log-space machinery.
      std::vector<double> expected(sc.prior.size());
      double sum = 0.0;
      for (std::size_t s = 0; s < expected.size(); ++s) {
        expected[s] =
            sc.prior[s] * std::pow(sc.experiment.likelihood(s, sc.signal), lambda);
        sum += expected[s];
      }
      for (double& v : expected) v /= sum;

      const ObjectiveSpec spec(std::move(sc.prior), std::move(sc.experiment), sc.signal,
                               {lambda, 0.0});
      const auto outcome = solve_convex(spec);
      for (std::size_t s = 0; s < expected.size(); ++s) {
        max_gap = std::max(max_gap, std::abs(outcome.posterior[s] - expected[s]));
      }
    }
  }
  return {max_gap <= 1e-8, "max gap " + std::to_string(max_gap) + " vs normalized p f^lambda"};
}

// --- 3. Solver matches the exponential rule across the convex regime. ------
Outcome check_exponential_equivalence() {
  SplitMix64 rng(1003);
  double max_gap = 0.0;
  for (double mu : {-2.0, -0.5, 0.5, 0.9}) {
    for (double lambda : {0.5, 1.0, 2.0}) {
      for (int trial = 0; trial < 100; ++trial) {
        auto sc = vbtest::random_scenario(rng, 12, 6);
        const ExponentParams closed_form(1.0 / (1.0 - mu), lambda / (1.0 - mu));
        const auto expected =
            exponential_update(sc.prior, sc.experiment, sc.signal, closed_form);
        const ObjectiveSpec spec(std::move(sc.prior), std::move(sc.experiment), sc.signal,
                                 {lambda, mu});
        const auto outcome = solve_convex(spec);
        max_gap = std::max(max_gap, vbtest::sup_distance(outcome.posterior, expected));
      }
    }
  }
  return {max_gap <= 1e-7, "max gap " + std::to_string(max_gap) + " across 12 (mu, lambda) cells"};
}

// --- 4. Concave regime: the Dirac beats the interior, and is the MAP. ------
Outcome check_concave_regime() {
  SplitMix64 rng(1004);
  const double lambdas[] = {0.5, 1.0, 2.0};
  for (double mu : {1.0, 1.5, 2.0}) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto sc = vbtest::random_scenario(rng, 8, 5);
      const double lambda = lambdas[trial % 3];
      const ObjectiveSpec spec(sc.prior, sc.experiment, sc.signal, {lambda, mu});
      const auto solution = solve_concave(spec);
      for (int point = 0; point < 10000; ++point) {
        const auto r = vbtest::random_on_support(rng, sc.prior.space_ptr(),
                                                 spec.feasible_states(), 1e-9);
        if (solution.objective_value > objective_value(r, spec) + 1e-10) {
          return {false, "an interior point beat the Dirac at mu=" + std::to_string(mu)};
        }
      }

      // lambda = 1 scores are p(s) f(x|s): the solution is the posterior mode.
      const ObjectiveSpec map_spec(sc.prior, sc.experiment, sc.signal, {1.0, mu});
      std::size_t argmax = 0;
      double best = -1.0;
      for (std::size_t s = 0; s < sc.prior.size(); ++s) {
        const double score = sc.prior[s] * sc.experiment.likelihood(s, sc.signal);
        if (score > best) {
          best = score;
          argmax = s;
        }
      }
      const auto map_solution = solve_concave(map_spec);
      if (map_solution.maximizers != std::vector<std::size_t>{argmax}) {
        return {false, "maximizer set differs from the linear-domain argmax of p f"};
      }
    }
  }
  return {true, "150 scenarios x 10000 interior points per mu, MAP sets exact"};
}

// --- 5. Gibbs distribution against grid search and random challengers. -----
Outcome check_gibbs_oracle() {
  SplitMix64 rng(1005);
  const auto two = make_state_space({"s0", "s1"});
  double worst_argmin_gap = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::vector<double> g{-5.0 + 10.0 * rng.uniform_unit(),
                                -5.0 + 10.0 * rng.uniform_unit()};
    const auto q_star = gibbs_from_potential(two, g);
    double best_t = 0.0, best_value = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 10000; ++i) {
      const double t = static_cast<double>(i) / 10000.0;  // resolution 1e-4
      const double value = vbtest::free_energy(std::vector<double>{t, 1.0 - t}, g);
      if (value < best_value) {
        best_value = value;
        best_t = t;
      }
    }
    worst_argmin_gap = std::max(worst_argmin_gap, std::abs(q_star[0] - best_t));
  }
  if (worst_argmin_gap > 2e-4) {
    return {false, "grid-search argmin gap " + std::to_string(worst_argmin_gap)};
  }

  for (std::size_t n = 2; n <= 6; ++n) {
    const auto space = make_state_space(vbtest::numbered_labels("s", n));
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<double> g(n);
      for (double& v : g) v = -5.0 + 10.0 * rng.uniform_unit();
      const auto q_star = gibbs_from_potential(space, g);
      const double optimum = vbtest::free_energy(q_star.masses(), g);
      for (int challenger = 0; challenger < 1000; ++challenger) {
        const auto r = Distribution(space, sample_simplex(rng, n, 1e-9));
        if (optimum > vbtest::free_energy(r.masses(), g) + 1e-10) {
          return {false, "a challenger beat the Gibbs distribution at |S|=" +
                             std::to_string(n)};
        }
      }
    }
  }
  std::ostringstream detail;
  detail << "grid argmin gap " << worst_argmin_gap << "; all challenger sweeps clean";
  return {true, detail.str()};
}

// --- 6. The exponent/preference maps invert each other. --------------------
Outcome check_parameter_bijection() {
  double worst_rel = 0.0;
  for (int i = 0; i <= 24; ++i) {
    for (int j = 0; j <= 24; ++j) {
      const double alpha = std::pow(10.0, -3.0 + 0.25 * i);
      const double beta = std::pow(10.0, -3.0 + 0.25 * j);
      const auto back = preferences_to_exponents(exponents_to_preferences({alpha, beta}));
      worst_rel = std::max(worst_rel, std::abs(back.alpha - alpha) / alpha);
      worst_rel = std::max(worst_rel, std::abs(back.beta - beta) / beta);
    }
  }
  return {worst_rel <= 1e-12,
          "worst relative roundtrip error " + std::to_string(worst_rel) + " on a 25x25 log grid"};
}

// --- 7. Information inequality. ---------------------------------------------
Outcome check_information_inequality() {
  SplitMix64 rng(1007);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t n = 2 + rng.uniform_index(9);
    const auto space = make_state_space(vbtest::numbered_labels("s", n));
    const Distribution q(space, sample_simplex(rng, n, 1e-9));
    const Distribution p(space, sample_simplex(rng, n, 1e-9));
    if (relative_entropy(q, p) < 0.0) {
      return {false, "negative divergence on a random pair"};
    }
    if (relative_entropy(p, p) != 0.0) {
      return {false, "D(p||p) is not exactly zero"};
    }
  }
  const auto space = make_state_space({"a", "b"});
  const double infinite =
      relative_entropy(Distribution(space, {0.5, 0.5}), Distribution(space, {1.0, 0.0}));
  if (infinite != std::numeric_limits<double>::infinity()) {
    return {false, "non-absolutely-continuous pair did not map to +inf"};
  }
  return {true, "10000 random pairs nonnegative; identity exact; +inf case exact"};
}

// --- 8. Grether regression recovers the generating exponents. ---------------
Outcome check_grether_recovery() {
  const auto space = make_state_space({"A", "B", "C"});
  const Experiment f(space, {"x", "y"}, {{0.7, 0.3}, {0.4, 0.6}, {0.15, 0.85}});
  std::uint64_t seed = 2024;
  double worst = 0.0;
  for (double alpha : {0.11, 0.3, 1.0, 3.0, 9.5}) {
    for (double beta : {0.11, 0.3, 1.0, 3.0, 9.5}) {
      const auto data = simulate_dataset(seed++, f, {alpha, beta}, 20, 0.0);
      const auto fit = grether_fit(data);
      worst = std::max(worst, std::abs(fit.alpha_hat - alpha));
      worst = std::max(worst, std::abs(fit.beta_hat - beta));
    }
  }
  if (worst > 1e-9) {
    return {false, "worst recovery error " + std::to_string(worst)};
  }
  const auto bayes_fit = grether_fit(simulate_dataset(seed, f, {1.0, 1.0}, 20, 0.0));
  if (!bayes_fit.implied_prefs) return {false, "Bayes fit produced no implied preferences"};
  if (std::abs(bayes_fit.alpha_hat - 1.0) > 1e-9 || std::abs(bayes_fit.beta_hat - 1.0) > 1e-9 ||
      std::abs(bayes_fit.implied_prefs->lambda - 1.0) > 1e-9 ||
      std::abs(bayes_fit.implied_prefs->mu) > 1e-9) {
    return {false, "Bayes data did not map to (1, 1) with (lambda, mu) = (1, 0)"};
  }
  std::ostringstream detail;
  detail << "worst |estimate - truth| " << worst << " over a 5x5 grid, n=20 noiseless";
  return {true, detail.str()};
}

// --- 9. Order dependence: exact statistic, and alpha = 1 commutes. ----------
Outcome check_order_dependence() {
  const auto space = make_state_space({"A", "B"});
  const Distribution prior(space, {0.5, 0.5});
  const Experiment f(space, {"x", "y"}, {{0.8, 0.5}, {0.2, 0.5}});
  const double tv = order_dependence(prior, {f, {"x", "y"}}, {2.0, 1.0}, 10);
  if (std::abs(tv - 0.14117647058823529) > 1e-9) {
    return {false, "fixed-scenario TV " + std::to_string(tv)};
  }

  SplitMix64 rng(1009);
  double worst = 0.0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto sc = vbtest::random_scenario(rng, 6, 5);
    const std::size_t length = 2 + rng.uniform_index(4);  // up to 5 signals
    std::vector<std::string> signals;
    for (std::size_t i = 0; i < length; ++i) {
      signals.push_back(sc.experiment.signal(rng.uniform_index(sc.experiment.num_signals())));
    }
    const ExponentParams unit_alpha(1.0, 0.3 + 2.7 * rng.uniform_unit());
    worst = std::max(worst, order_dependence(sc.prior, {sc.experiment, signals}, unit_alpha,
                                             120));
  }
  std::ostringstream detail;
  detail << "fixed TV within 1e-9; worst alpha=1 TV " << worst;
  return {worst <= 1e-12, detail.str()};
}

// --- 10. mu -> 1 limit concentrates on the MAP state. -----------------------
Outcome check_degenerate_limit() {
  const auto space = make_state_space({"A", "B"});
  const Distribution prior(space, {0.25, 0.75});
  const Experiment f(space, {"x", "y"}, {{0.8, 0.2}, {0.2, 0.8}});
  const ObjectiveSpec spec(prior, f, 0, {1.0, 0.999});
  const auto outcome = solve_convex(spec);
  std::ostringstream detail;
  detail << "MAP-state mass " << outcome.posterior[0] << " at mu = 0.999";
  return {outcome.posterior[0] >= 0.99, detail.str()};
}

// --- 11. CLI determinism and the simulate -> estimate round trip. -----------
std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string value_of(const std::string& text, const std::string& key) {
  const auto pos = text.find(key + ",");
  if (pos == std::string::npos) return "";
  const auto start = pos + key.size() + 1;
  return text.substr(start, text.find('\n', start) - start);
}

Outcome check_cli_roundtrip() {
  char dir_template[] = "/tmp/vb_accept_XXXXXX";
  if (mkdtemp(dir_template) == nullptr) return {false, "cannot create temp dir"};
  const std::string dir = dir_template;
  {
    std::ofstream scenario(dir + "/scenario.json");
    scenario << R"({"states": ["A", "B", "C"], "prior": [0.4, 0.35, 0.25],
                    "signals": ["x", "y"],
                    "likelihood": [[0.7, 0.3], [0.4, 0.6], [0.15, 0.85]],
                    "realized_signal": "x", "rule": {"type": "bayes"}})";
  }
  const auto run = [&dir](const std::string& args) {
    const std::string command = std::string(VARBELIEF_CLI_PATH) + " " + args + " >" + dir +
                                "/out.txt 2>" + dir + "/err.txt";
    const int status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  };

  const std::string flags =
      " --alpha 2 --beta 0.5 --n 20 --seed 31415 --noise 0 --out " + dir;
  if (run("simulate --scenario " + dir + "/scenario.json" + flags + "/d1.csv") != 0 ||
      run("simulate --scenario " + dir + "/scenario.json" + flags + "/d2.csv") != 0) {
    return {false, "simulate exited nonzero"};
  }
  if (slurp(dir + "/d1.csv") != slurp(dir + "/d2.csv")) {
    return {false, "simulate runs are not byte-identical"};
  }
  if (run("estimate --data " + dir + "/d1.csv") != 0) {
    return {false, "estimate exited nonzero"};
  }
  const std::string first = slurp(dir + "/out.txt");
  if (run("estimate --data " + dir + "/d1.csv") != 0 || slurp(dir + "/out.txt") != first) {
    return {false, "estimate runs are not byte-identical"};
  }
  const double alpha_hat = std::atof(value_of(first, "alpha_hat").c_str());
  const double beta_hat = std::atof(value_of(first, "beta_hat").c_str());
  std::ostringstream detail;
  detail << "recovered alpha " << alpha_hat << ", beta " << beta_hat << " through the CSV";
  return {std::abs(alpha_hat - 2.0) <= 1e-9 && std::abs(beta_hat - 0.5) <= 1e-9, detail.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, CriterionFn>> criteria = {
      {"solver matches Bayes at (lambda, mu) = (1, 0), 1e-8", check_bayes_equivalence},
      {"solver matches tempered posterior p f^lambda, 1e-8", check_tempered_equivalence},
      {"solver matches exponential rule for mu < 1, 1e-7", check_exponential_equivalence},
      {"mu >= 1 Dirac beats interior points; MAP set exact", check_concave_regime},
      {"Gibbs distribution passes grid-search and challenger oracles", check_gibbs_oracle},
      {"exponent/preference roundtrip identity, 1e-12 relative", check_parameter_bijection},
      {"relative entropy nonnegative, zero iff equal, +inf off-support",
       check_information_inequality},
      {"Grether regression recovers exponents, 1e-9", check_grether_recovery},
      {"order-dependence statistic exact; alpha = 1 commutes", check_order_dependence},
      {"mu = 0.999 posterior concentrates on the MAP state", check_degenerate_limit},
      {"CLI simulate/estimate round trip, byte-stable output", check_cli_roundtrip},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %02zu %s: %s (%.2fs)\n", outcome.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first, outcome.detail.c_str(), seconds);
    if (!outcome.pass) ++failures;
  }
  std::printf("acceptance: %zu/%zu criteria passed\n", criteria.size() - failures,
              criteria.size());
  return failures;
}
