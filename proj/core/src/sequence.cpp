#include "varbelief/sequence.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "varbelief/information.hpp"
#include "varbelief/rng.hpp"
#include "varbelief/updating.hpp"

namespace varbelief {

namespace {

// Fixed seed for the permutation subsample so repeated calls agree.
constexpr std::uint64_t kPermutationSampleSeed = 0x5EEDC0DE5EEDC0DEULL;

Distribution fold(const Distribution& prior, const Experiment& experiment,
                  std::span<const std::size_t> order, const ExponentParams& rule) {
  Distribution q = prior;
  for (std::size_t step = 0; step < order.size(); ++step) {
    try {
      q = exponential_update(q, experiment, order[step], rule);
    } catch (const std::domain_error&) {
      throw std::domain_error("sequential update infeasible at step " + std::to_string(step) +
                              " (signal '" + experiment.signal(order[step]) + "')");
    }
  }
  return q;
}

}  // namespace

SignalSequence::SignalSequence(Experiment experiment, std::vector<std::string> signals)
    : experiment_(std::move(experiment)), signals_(std::move(signals)) {
  indices_.reserve(signals_.size());
  for (const auto& label : signals_) {
    const auto index = experiment_.signal_index(label);
    if (!index) {
      throw std::invalid_argument("SignalSequence: signal '" + label +
                                  "' is not in the experiment");
    }
    indices_.push_back(*index);
  }
}

Distribution sequential_update(const Distribution& prior, const SignalSequence& seq,
                               const ExponentParams& rule) {
  if (!same_space(prior, seq.experiment())) {
    throw std::invalid_argument(
        "sequential_update: prior and experiment live on different spaces");
  }
  return fold(prior, seq.experiment(), seq.signal_indices(), rule);
}

double order_dependence(const Distribution& prior, const SignalSequence& seq,
                        const ExponentParams& rule, std::size_t max_permutations) {
  if (seq.size() < 2) {
    throw std::invalid_argument("order_dependence: needs a sequence of at least two signals");
  }
  if (max_permutations == 0) {
    throw std::invalid_argument("order_dependence: max_permutations must be positive");
  }

  // Distinct rearrangements only, so a run of identical signals has exactly
  // one and the statistic is 0 by construction.
  std::vector<std::vector<std::size_t>> orders;
  std::vector<std::size_t> arrangement = seq.signal_indices();
  std::sort(arrangement.begin(), arrangement.end());
  bool exhaustive = true;
  do {
    orders.push_back(arrangement);
    if (orders.size() > max_permutations) {
      exhaustive = false;
      break;
    }
  } while (std::next_permutation(arrangement.begin(), arrangement.end()));

  if (!exhaustive) {
    orders.clear();
    orders.push_back(seq.signal_indices());  // the given order
    SplitMix64 rng(kPermutationSampleSeed);
    while (orders.size() < max_permutations) {
      std::vector<std::size_t> shuffled = seq.signal_indices();
      for (std::size_t i = shuffled.size() - 1; i > 0; --i) {
        std::swap(shuffled[i], shuffled[rng.uniform_index(i + 1)]);
      }
      orders.push_back(std::move(shuffled));
    }
  }

  std::vector<Distribution> outcomes;
  outcomes.reserve(orders.size());
  for (const auto& order : orders) {
    outcomes.push_back(fold(prior, seq.experiment(), order, rule));
  }

  double max_tv = 0.0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    for (std::size_t j = i + 1; j < outcomes.size(); ++j) {
      max_tv = std::max(max_tv, total_variation(outcomes[i], outcomes[j]));
    }
  }
  return max_tv;
}

}  // namespace varbelief
