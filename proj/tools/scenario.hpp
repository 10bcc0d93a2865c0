#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "varbelief/distribution.hpp"
#include "varbelief/experiment.hpp"
#include "varbelief/parameters.hpp"
#include "varbelief/state_space.hpp"

namespace vbcli {

// The updating rule named by a scenario file.
struct RuleSpec {
  enum class Kind { bayes, exponential, variational };
  Kind kind = Kind::bayes;
  double alpha = 1.0;
  double beta = 1.0;
  double lambda = 1.0;
  double mu = 0.0;
};

// A validated scenario: states, prior, likelihood table, realized signal and
// rule. Prior and likelihood rows are accepted when they sum to 1 within
// 1e-9 and are renormalized exactly; adjustments above 1e-12 produce a
// warning line on stderr.
struct Scenario {
  varbelief::StateSpacePtr space;
  varbelief::Distribution prior;
  varbelief::Experiment experiment;
  std::string realized_signal;
  std::size_t signal_index;
  RuleSpec rule;
};

// Raised for anything wrong with a scenario file; the message names the
// offending field.
struct ScenarioError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Scenario parse_scenario(const std::string& path);

// Rule translations used by the subcommands. Every rule has a preference
// representation; only mu < 1 rules have an exponential one.
varbelief::PreferenceParams preferences_from_rule(const RuleSpec& rule);
varbelief::ExponentParams exponents_from_rule(const RuleSpec& rule);

}  // namespace vbcli
