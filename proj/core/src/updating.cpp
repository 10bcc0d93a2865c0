#include "varbelief/updating.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "varbelief/numeric.hpp"

namespace varbelief {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check_likelihood_row(const Distribution& prior, std::span<const double> row,
                          const char* who) {
  if (row.size() != prior.size()) {
    throw std::invalid_argument(std::string(who) + ": likelihood vector has " +
                                std::to_string(row.size()) + " entries for " +
                                std::to_string(prior.size()) + " states");
  }
  for (std::size_t s = 0; s < row.size(); ++s) {
    if (!std::isfinite(row[s]) || row[s] < 0.0) {
      throw std::invalid_argument(std::string(who) + ": likelihood[" + std::to_string(s) +
                                  "] must be a finite nonnegative number");
    }
  }
}

}  // namespace

Distribution bayes_update(const Distribution& prior, std::span<const double> likelihood_row) {
  check_likelihood_row(prior, likelihood_row, "bayes_update");
  std::vector<double> log_weights(prior.size(), kNegInf);
  bool feasible = false;
  for (std::size_t s = 0; s < prior.size(); ++s) {
    if (prior[s] > 0.0 && likelihood_row[s] > 0.0) {
      log_weights[s] = std::log(prior[s]) + std::log(likelihood_row[s]);
      feasible = true;
    }
  }
  if (!feasible) {
    throw std::domain_error(
        "bayes_update: signal has zero marginal probability under the prior "
        "(inconsistent scenario)");
  }
  return {prior.space_ptr(), normalized_from_log_weights(log_weights)};
}

Distribution bayes_update(const Distribution& prior, const Experiment& f, std::size_t signal) {
  if (!same_space(prior, f)) {
    throw std::invalid_argument("bayes_update: prior and experiment live on different spaces");
  }
  return bayes_update(prior, f.likelihood_column(signal));
}

Distribution exponential_update(const Distribution& prior, std::span<const double> likelihood_row,
                                const ExponentParams& params) {
  check_likelihood_row(prior, likelihood_row, "exponential_update");
  std::vector<double> log_weights(prior.size(), kNegInf);
  bool feasible = false;
  for (std::size_t s = 0; s < prior.size(); ++s) {
    if (prior[s] > 0.0 && likelihood_row[s] > 0.0) {
      log_weights[s] =
          params.alpha * std::log(prior[s]) + params.beta * std::log(likelihood_row[s]);
      feasible = true;
    }
  }
  if (!feasible) {
    throw std::domain_error(
        "exponential_update: every state has zero weight (inconsistent scenario)");
  }
  return {prior.space_ptr(), normalized_from_log_weights(log_weights)};
}

Distribution exponential_update(const Distribution& prior, const Experiment& f,
                                std::size_t signal, const ExponentParams& params) {
  if (!same_space(prior, f)) {
    throw std::invalid_argument(
        "exponential_update: prior and experiment live on different spaces");
  }
  return exponential_update(prior, f.likelihood_column(signal), params);
}

Distribution gibbs_from_potential(StateSpacePtr space, std::span<const double> potential) {
  if (!space) throw std::invalid_argument("gibbs_from_potential: null state space");
  if (potential.size() != space->size()) {
    throw std::invalid_argument("gibbs_from_potential: potential has " +
                                std::to_string(potential.size()) + " entries for " +
                                std::to_string(space->size()) + " states");
  }
  std::vector<double> log_weights(potential.size());
  bool feasible = false;
  for (std::size_t s = 0; s < potential.size(); ++s) {
    const double g = potential[s];
    if (std::isnan(g) || g == kNegInf) {
      throw std::invalid_argument("gibbs_from_potential: potential[" + std::to_string(s) +
                                  "] must be finite or +inf");
    }
    log_weights[s] = -g;  // g == +inf excludes the state
    if (g != std::numeric_limits<double>::infinity()) feasible = true;
  }
  if (!feasible) {
    throw std::domain_error("gibbs_from_potential: potential is +inf on every state");
  }
  return {std::move(space), normalized_from_log_weights(log_weights)};
}

}  // namespace varbelief
