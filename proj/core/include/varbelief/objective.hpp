#pragma once

#include <cstddef>
#include <vector>

#include "varbelief/distribution.hpp"
#include "varbelief/experiment.hpp"
#include "varbelief/parameters.hpp"

namespace varbelief {

// One instance of the variational problem
//   min over q of  D(q||p) - lambda * sum_s q(s) log f(x|s) + mu * H(q).
// lambda = 1, mu = 0 recovers plain variational Bayes; mu = 0 with free
// lambda is the misspecification-weighted problem.
class ObjectiveSpec {
 public:
  ObjectiveSpec(Distribution prior, Experiment experiment, std::size_t signal,
                PreferenceParams prefs);

  const Distribution& prior() const { return prior_; }
  const Experiment& experiment() const { return experiment_; }
  std::size_t signal() const { return signal_; }
  const PreferenceParams& prefs() const { return prefs_; }

  // States with p(s) > 0 and f(x|s) > 0; nonempty by construction. Any
  // minimizer is supported here.
  const std::vector<std::size_t>& feasible_states() const { return feasible_; }

 private:
  Distribution prior_;
  Experiment experiment_;
  std::size_t signal_;
  PreferenceParams prefs_;
  std::vector<std::size_t> feasible_;
};

// Objective at q. Returns +infinity when q puts mass outside the prior's
// support or on a state whose likelihood for the realized signal is zero.
double objective_value(const Distribution& q, const ObjectiveSpec& spec);

}  // namespace varbelief
