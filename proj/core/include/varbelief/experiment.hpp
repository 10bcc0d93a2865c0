#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "varbelief/distribution.hpp"
#include "varbelief/state_space.hpp"

namespace varbelief {

// Likelihood table of a Blackwell experiment: one probability row over the
// signal alphabet per state. Rows sum to 1 within 1e-12.
class Experiment {
 public:
  // rows[state][signal] = f(signal | state)
  Experiment(StateSpacePtr space, std::vector<std::string> signals,
             std::vector<std::vector<double>> rows);

  const StateSpace& space() const { return *space_; }
  const StateSpacePtr& space_ptr() const { return space_; }
  std::size_t num_states() const { return space_->size(); }
  std::size_t num_signals() const { return signals_.size(); }
  const std::vector<std::string>& signals() const { return signals_; }
  const std::string& signal(std::size_t x) const { return signals_[x]; }
  std::optional<std::size_t> signal_index(std::string_view label) const;

  double likelihood(std::size_t state, std::size_t signal) const {
    return table_[state * signals_.size() + signal];
  }
  // Row f(.|s) over signals.
  std::span<const double> row(std::size_t state) const;
  // Column f(x|.) over states, the vector consumed by the updating rules.
  std::vector<double> likelihood_column(std::size_t signal) const;

 private:
  StateSpacePtr space_;
  std::vector<std::string> signals_;
  std::vector<double> table_;  // row-major, |S| x |X|
};

bool same_space(const Distribution& p, const Experiment& f);

}  // namespace varbelief
