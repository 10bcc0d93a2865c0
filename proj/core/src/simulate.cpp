#include "varbelief/simulate.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "varbelief/numeric.hpp"
#include "varbelief/rng.hpp"
#include "varbelief/updating.hpp"

namespace varbelief {

namespace {
constexpr double kPriorFloor = 1e-6;
}

std::vector<UpdateObservation> simulate_dataset(std::uint64_t seed, const Experiment& experiment,
                                                const ExponentParams& params, std::size_t n,
                                                double noise_scale) {
  if (n == 0) {
    throw std::invalid_argument("simulate_dataset: n must be at least 1");
  }
  if (!std::isfinite(noise_scale) || noise_scale < 0.0) {
    throw std::invalid_argument("simulate_dataset: noise_scale must be finite and nonnegative");
  }

  const std::size_t num_states = experiment.num_states();
  const std::size_t num_signals = experiment.num_signals();
  SplitMix64 rng(seed);

  std::vector<UpdateObservation> observations;
  observations.reserve(n);
  std::vector<double> marginal(num_signals);
  for (std::size_t i = 0; i < n; ++i) {
    Distribution prior(experiment.space_ptr(), sample_simplex(rng, num_states, kPriorFloor));

    for (std::size_t x = 0; x < num_signals; ++x) {
      double m = 0.0;
      for (std::size_t s = 0; s < num_states; ++s) {
        m += experiment.likelihood(s, x) * prior[s];
      }
      marginal[x] = m;
    }
    const std::size_t signal = sample_categorical(rng, marginal);

    Distribution posterior = exponential_update(prior, experiment, signal, params);
    if (noise_scale > 0.0) {
      std::vector<double> log_mass(num_states);
      for (std::size_t s = 0; s < num_states; ++s) {
        log_mass[s] = posterior[s] > 0.0 ? std::log(posterior[s])
                                         : -std::numeric_limits<double>::infinity();
      }
      for (std::size_t s = 1; s < num_states; ++s) {  // state 0 is the reference
        log_mass[s] += noise_scale * rng.gaussian();
      }
      posterior = Distribution(experiment.space_ptr(), normalized_from_log_weights(log_mass));
    }

    observations.emplace_back(std::move(prior), experiment.likelihood_column(signal),
                              std::move(posterior));
  }
  return observations;
}

}  // namespace varbelief
