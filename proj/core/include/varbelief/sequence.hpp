#pragma once

#include <string>
#include <vector>

#include "varbelief/distribution.hpp"
#include "varbelief/experiment.hpp"
#include "varbelief/parameters.hpp"

namespace varbelief {

// An ordered run of signal realizations, all drawn from the same experiment.
class SignalSequence {
 public:
  SignalSequence(Experiment experiment, std::vector<std::string> signals);

  const Experiment& experiment() const { return experiment_; }
  const std::vector<std::string>& signals() const { return signals_; }
  const std::vector<std::size_t>& signal_indices() const { return indices_; }
  std::size_t size() const { return signals_.size(); }

 private:
  Experiment experiment_;
  std::vector<std::string> signals_;
  std::vector<std::size_t> indices_;
};

// Left fold of exponential_update over the signals, each step feeding the
// previous posterior back in as the prior. An empty sequence returns the
// prior unchanged. An infeasible intermediate step raises std::domain_error
// naming the step.
Distribution sequential_update(const Distribution& prior, const SignalSequence& seq,
                               const ExponentParams& rule);

// Largest total-variation distance between sequential_update outcomes over
// permutations of the signal list: all distinct permutations when there are
// at most max_permutations of them, otherwise a fixed-seed deterministic
// sample of max_permutations orders that always includes the given one.
// Zero (up to rounding) exactly when alpha = 1, where updating commutes.
double order_dependence(const Distribution& prior, const SignalSequence& seq,
                        const ExponentParams& rule, std::size_t max_permutations);

}  // namespace varbelief
