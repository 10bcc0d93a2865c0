#pragma once

#include <string>
#include <vector>

#include "varbelief/varbelief.hpp"

namespace vbtest {

inline std::vector<std::string> numbered_labels(const std::string& prefix, std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  return labels;
}

// A fully specified random updating problem with strictly positive prior
// and likelihoods (floor keeps the log-ratios at desk scale).
struct Scenario {
  varbelief::StateSpacePtr space;
  varbelief::Distribution prior;
  varbelief::Experiment experiment;
  std::size_t signal;
};

inline Scenario random_scenario(varbelief::SplitMix64& rng, std::size_t max_states = 20,
                                std::size_t max_signals = 10, double floor_mass = 1e-4) {
  const std::size_t num_states = 2 + rng.uniform_index(max_states - 1);
  const std::size_t num_signals = 2 + rng.uniform_index(max_signals - 1);
  auto space = varbelief::make_state_space(numbered_labels("s", num_states));

  varbelief::Distribution prior(space, varbelief::sample_simplex(rng, num_states, floor_mass));
  std::vector<std::vector<double>> rows;
  rows.reserve(num_states);
  for (std::size_t s = 0; s < num_states; ++s) {
    rows.push_back(varbelief::sample_simplex(rng, num_signals, floor_mass));
  }
  varbelief::Experiment experiment(space, numbered_labels("x", num_signals), std::move(rows));
  const std::size_t signal = rng.uniform_index(num_signals);
  return {std::move(space), std::move(prior), std::move(experiment), signal};
}

// Random distribution supported exactly on `states` (strictly positive
// there, zero elsewhere).
inline varbelief::Distribution random_on_support(varbelief::SplitMix64& rng,
                                                 varbelief::StateSpacePtr space,
                                                 const std::vector<std::size_t>& states,
                                                 double floor_mass = 1e-6) {
  auto inner = varbelief::sample_simplex(rng, states.size(), floor_mass);
  std::vector<double> mass(space->size(), 0.0);
  for (std::size_t j = 0; j < states.size(); ++j) mass[states[j]] = inner[j];
  return {std::move(space), std::move(mass)};
}

inline double sup_distance(const varbelief::Distribution& a, const varbelief::Distribution& b) {
  double d = 0.0;
  for (std::size_t s = 0; s < a.size(); ++s) {
    d = std::max(d, std::abs(a[s] - b[s]));
  }
  return d;
}

// E_q g - H(q) evaluated directly (sum q g + sum q log q over the support),
// independent of the library's entropy/expectation path.
inline double free_energy(std::span<const double> mass, std::span<const double> g) {
  double value = 0.0;
  for (std::size_t s = 0; s < mass.size(); ++s) {
    if (mass[s] > 0.0) value += mass[s] * g[s] + mass[s] * std::log(mass[s]);
  }
  return value;
}

}  // namespace vbtest
