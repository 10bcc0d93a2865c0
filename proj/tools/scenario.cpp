#include "scenario.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <unordered_set>
#include <vector>

#include "json.hpp"

namespace vbcli {

namespace {

using nlohmann::json;

constexpr double kInputSumTolerance = 1e-9;
constexpr double kWarnAdjustment = 1e-12;

const json& require_field(const json& root, const char* name) {
  const auto it = root.find(name);
  if (it == root.end()) {
    throw ScenarioError(std::string("scenario: missing field '") + name + "'");
  }
  return *it;
}

std::vector<std::string> parse_labels(const json& value, const std::string& field) {
  if (!value.is_array() || value.empty()) {
    throw ScenarioError("scenario: '" + field + "' must be a non-empty array of strings");
  }
  std::vector<std::string> labels;
  std::unordered_set<std::string> seen;
  for (const auto& item : value) {
    if (!item.is_string() || item.get<std::string>().empty()) {
      throw ScenarioError("scenario: '" + field + "' must contain non-empty strings");
    }
    auto label = item.get<std::string>();
    if (!seen.insert(label).second) {
      throw ScenarioError("scenario: duplicate label '" + label + "' in '" + field + "'");
    }
    labels.push_back(std::move(label));
  }
  return labels;
}

std::vector<double> parse_numbers(const json& value, std::size_t expected,
                                  const std::string& field) {
  if (!value.is_array() || value.size() != expected) {
    throw ScenarioError("scenario: '" + field + "' must be an array of " +
                        std::to_string(expected) + " numbers");
  }
  std::vector<double> numbers;
  numbers.reserve(expected);
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (!value[i].is_number()) {
      throw ScenarioError("scenario: " + field + "[" + std::to_string(i) + "] is not a number");
    }
    const double v = value[i].get<double>();
    if (!std::isfinite(v)) {
      throw ScenarioError("scenario: " + field + "[" + std::to_string(i) + "] is not finite");
    }
    if (v < 0.0) {
      throw ScenarioError("scenario: " + field + "[" + std::to_string(i) + "] is negative");
    }
    numbers.push_back(v);
  }
  return numbers;
}

// Validates the sum at the 1e-9 input tolerance, then renormalizes exactly.
std::vector<double> normalize_probabilities(std::vector<double> mass, const std::string& field) {
  double sum = 0.0;
  for (double m : mass) sum += m;
  if (std::abs(sum - 1.0) > kInputSumTolerance) {
    throw ScenarioError("scenario: '" + field + "' sums to " + std::to_string(sum) +
                        " (must be 1 within 1e-9)");
  }
  if (std::abs(sum - 1.0) > kWarnAdjustment) {
    std::cerr << "warning: renormalized '" << field << "' (sum was off by "
              << std::abs(sum - 1.0) << ")\n";
  }
  for (double& m : mass) m /= sum;
  return mass;
}

double parse_rule_number(const json& rule, const char* name) {
  const auto& value = require_field(rule, name);
  if (!value.is_number() || !std::isfinite(value.get<double>())) {
    throw ScenarioError(std::string("scenario: 'rule.") + name + "' must be a finite number");
  }
  return value.get<double>();
}

RuleSpec parse_rule(const json& value) {
  if (!value.is_object()) {
    throw ScenarioError("scenario: 'rule' must be an object with a 'type'");
  }
  const auto& type = require_field(value, "type");
  if (!type.is_string()) {
    throw ScenarioError("scenario: 'rule.type' must be a string");
  }
  RuleSpec rule;
  const auto kind = type.get<std::string>();
  if (kind == "bayes") {
    rule.kind = RuleSpec::Kind::bayes;
  } else if (kind == "exponential") {
    rule.kind = RuleSpec::Kind::exponential;
    rule.alpha = parse_rule_number(value, "alpha");
    rule.beta = parse_rule_number(value, "beta");
    if (rule.alpha <= 0.0 || rule.beta <= 0.0) {
      throw ScenarioError("scenario: 'rule.alpha' and 'rule.beta' must be positive");
    }
  } else if (kind == "variational") {
    rule.kind = RuleSpec::Kind::variational;
    rule.lambda = parse_rule_number(value, "lambda");
    rule.mu = parse_rule_number(value, "mu");
    if (rule.lambda <= 0.0) {
      throw ScenarioError("scenario: 'rule.lambda' must be positive");
    }
  } else {
    throw ScenarioError("scenario: unknown rule type '" + kind +
                        "' (expected bayes, exponential or variational)");
  }
  return rule;
}

}  // namespace

Scenario parse_scenario(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    throw ScenarioError("scenario: cannot open file '" + path + "'");
  }
  json root;
  try {
    root = json::parse(file);
  } catch (const json::parse_error& e) {
    throw ScenarioError(std::string("scenario: invalid JSON: ") + e.what());
  }
  if (!root.is_object()) {
    throw ScenarioError("scenario: top level must be a JSON object");
  }

  auto states = parse_labels(require_field(root, "states"), "states");
  auto signals = parse_labels(require_field(root, "signals"), "signals");
  const std::size_t num_states = states.size();
  const std::size_t num_signals = signals.size();

  auto prior_mass =
      normalize_probabilities(parse_numbers(require_field(root, "prior"), num_states, "prior"),
                              "prior");

  const auto& likelihood = require_field(root, "likelihood");
  if (!likelihood.is_array() || likelihood.size() != num_states) {
    throw ScenarioError("scenario: 'likelihood' must have one row per state (" +
                        std::to_string(num_states) + " rows)");
  }
  std::vector<std::vector<double>> rows;
  rows.reserve(num_states);
  for (std::size_t s = 0; s < num_states; ++s) {
    const std::string field = "likelihood[" + states[s] + "]";
    rows.push_back(normalize_probabilities(parse_numbers(likelihood[s], num_signals, field),
                                           field));
  }

  const auto& realized = require_field(root, "realized_signal");
  if (!realized.is_string()) {
    throw ScenarioError("scenario: 'realized_signal' must be a string");
  }
  const auto realized_label = realized.get<std::string>();

  RuleSpec rule = parse_rule(require_field(root, "rule"));

  auto space = varbelief::make_state_space(std::move(states));
  varbelief::Distribution prior(space, std::move(prior_mass));
  varbelief::Experiment experiment(space, std::move(signals), std::move(rows));
  const auto signal_index = experiment.signal_index(realized_label);
  if (!signal_index) {
    throw ScenarioError("scenario: realized_signal '" + realized_label +
                        "' is not in 'signals'");
  }

  return Scenario{std::move(space), std::move(prior), std::move(experiment),
                  realized_label, *signal_index, rule};
}

varbelief::PreferenceParams preferences_from_rule(const RuleSpec& rule) {
  switch (rule.kind) {
    case RuleSpec::Kind::bayes:
      return {1.0, 0.0};
    case RuleSpec::Kind::exponential:
      return varbelief::exponents_to_preferences({rule.alpha, rule.beta});
    case RuleSpec::Kind::variational:
      return {rule.lambda, rule.mu};
  }
  throw std::logic_error("unreachable rule kind");
}

varbelief::ExponentParams exponents_from_rule(const RuleSpec& rule) {
  switch (rule.kind) {
    case RuleSpec::Kind::bayes:
      return {1.0, 1.0};
    case RuleSpec::Kind::exponential:
      return {rule.alpha, rule.beta};
    case RuleSpec::Kind::variational:
      return varbelief::preferences_to_exponents({rule.lambda, rule.mu});
  }
  throw std::logic_error("unreachable rule kind");
}

}  // namespace vbcli
