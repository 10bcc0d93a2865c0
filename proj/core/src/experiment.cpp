#include "varbelief/experiment.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace varbelief {

namespace {
constexpr double kRowSumTolerance = 1e-12;
}

Experiment::Experiment(StateSpacePtr space, std::vector<std::string> signals,
                       std::vector<std::vector<double>> rows)
    : space_(std::move(space)), signals_(std::move(signals)) {
  if (!space_) {
    throw std::invalid_argument("Experiment: null state space");
  }
  if (signals_.empty()) {
    throw std::invalid_argument("Experiment: needs at least one signal");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& label : signals_) {
    if (label.empty()) {
      throw std::invalid_argument("Experiment: signal labels must be non-empty");
    }
    if (!seen.insert(label).second) {
      throw std::invalid_argument("Experiment: duplicate signal label '" + label + "'");
    }
  }
  if (rows.size() != space_->size()) {
    throw std::invalid_argument("Experiment: " + std::to_string(rows.size()) +
                                " likelihood rows for " + std::to_string(space_->size()) +
                                " states");
  }
  table_.reserve(space_->size() * signals_.size());
  for (std::size_t s = 0; s < rows.size(); ++s) {
    const auto& row = rows[s];
    if (row.size() != signals_.size()) {
      throw std::invalid_argument("Experiment: likelihood row for state '" + space_->label(s) +
                                  "' has " + std::to_string(row.size()) + " entries for " +
                                  std::to_string(signals_.size()) + " signals");
    }
    double sum = 0.0;
    for (std::size_t x = 0; x < row.size(); ++x) {
      const double v = row[x];
      if (!std::isfinite(v) || v < 0.0) {
        throw std::invalid_argument("Experiment: likelihood[" + space_->label(s) + "][" +
                                    signals_[x] + "] must be a finite nonnegative number");
      }
      sum += v;
    }
    if (std::abs(sum - 1.0) > kRowSumTolerance) {
      throw std::invalid_argument("Experiment: likelihood row for state '" + space_->label(s) +
                                  "' sums to " + std::to_string(sum) + ", not 1 within 1e-12");
    }
    table_.insert(table_.end(), row.begin(), row.end());
  }
}

std::optional<std::size_t> Experiment::signal_index(std::string_view label) const {
  for (std::size_t x = 0; x < signals_.size(); ++x) {
    if (signals_[x] == label) return x;
  }
  return std::nullopt;
}

std::span<const double> Experiment::row(std::size_t state) const {
  return {table_.data() + state * signals_.size(), signals_.size()};
}

std::vector<double> Experiment::likelihood_column(std::size_t signal) const {
  if (signal >= signals_.size()) {
    throw std::invalid_argument("Experiment: signal index out of range");
  }
  std::vector<double> column(space_->size());
  for (std::size_t s = 0; s < column.size(); ++s) {
    column[s] = likelihood(s, signal);
  }
  return column;
}

bool same_space(const Distribution& p, const Experiment& f) {
  return p.space_ptr() == f.space_ptr() || p.space() == f.space();
}

}  // namespace varbelief
