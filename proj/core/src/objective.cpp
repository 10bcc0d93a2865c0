#include "varbelief/objective.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace varbelief {

ObjectiveSpec::ObjectiveSpec(Distribution prior, Experiment experiment, std::size_t signal,
                             PreferenceParams prefs)
    : prior_(std::move(prior)),
      experiment_(std::move(experiment)),
      signal_(signal),
      prefs_(prefs) {
  if (!same_space(prior_, experiment_)) {
    throw std::invalid_argument("ObjectiveSpec: prior and experiment live on different spaces");
  }
  if (signal_ >= experiment_.num_signals()) {
    throw std::invalid_argument("ObjectiveSpec: signal index out of range");
  }
  for (std::size_t s = 0; s < prior_.size(); ++s) {
    if (prior_[s] > 0.0 && experiment_.likelihood(s, signal_) > 0.0) {
      feasible_.push_back(s);
    }
  }
  if (feasible_.empty()) {
    throw std::domain_error(
        "ObjectiveSpec: no state has positive prior and positive likelihood "
        "(empty feasible set)");
  }
}

double objective_value(const Distribution& q, const ObjectiveSpec& spec) {
  if (!same_space(q, spec.prior())) {
    throw std::invalid_argument("objective_value: q lives on a different state space");
  }
  const double lambda = spec.prefs().lambda;
  const double one_minus_mu = 1.0 - spec.prefs().mu;
  // D(q||p) - lambda E_q[log f] + mu H(q) = sum_q>0 q [(1-mu) log q - log p - lambda log f]
  double value = 0.0;
  for (std::size_t s = 0; s < q.size(); ++s) {
    const double qm = q[s];
    if (qm == 0.0) continue;
    const double pm = spec.prior()[s];
    const double fm = spec.experiment().likelihood(s, spec.signal());
    if (pm == 0.0 || fm == 0.0) {
      return std::numeric_limits<double>::infinity();
    }
    value += qm * (one_minus_mu * std::log(qm) - std::log(pm) - lambda * std::log(fm));
  }
  return value;
}

}  // namespace varbelief
