#include "varbelief/distribution.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace varbelief {

namespace {
constexpr double kSumTolerance = 1e-12;
}

Distribution::Distribution(StateSpacePtr space, std::vector<double> mass)
    : space_(std::move(space)), mass_(std::move(mass)) {
  if (!space_) {
    throw std::invalid_argument("Distribution: null state space");
  }
  if (mass_.size() != space_->size()) {
    throw std::invalid_argument("Distribution: mass vector has " + std::to_string(mass_.size()) +
                                " entries for " + std::to_string(space_->size()) + " states");
  }
  double sum = 0.0;
  for (std::size_t s = 0; s < mass_.size(); ++s) {
    const double m = mass_[s];
    if (!std::isfinite(m)) {
      throw std::invalid_argument("Distribution: mass[" + std::to_string(s) + "] is not finite");
    }
    if (m < 0.0) {
      throw std::invalid_argument("Distribution: mass[" + std::to_string(s) + "] is negative");
    }
    sum += m;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw std::invalid_argument("Distribution: masses sum to " + std::to_string(sum) +
                                ", not 1 within 1e-12");
  }
}

Distribution Distribution::uniform(StateSpacePtr space) {
  if (!space) throw std::invalid_argument("Distribution::uniform: null state space");
  const std::size_t n = space->size();
  return Distribution(std::move(space), std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

Distribution Distribution::dirac(StateSpacePtr space, std::size_t state) {
  if (!space) throw std::invalid_argument("Distribution::dirac: null state space");
  if (state >= space->size()) {
    throw std::invalid_argument("Distribution::dirac: state index out of range");
  }
  std::vector<double> mass(space->size(), 0.0);
  mass[state] = 1.0;
  return Distribution(std::move(space), std::move(mass));
}

bool same_space(const Distribution& a, const Distribution& b) {
  return a.space_ptr() == b.space_ptr() || a.space() == b.space();
}

std::vector<std::size_t> support(const Distribution& p) {
  std::vector<std::size_t> indices;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (p[s] > 0.0) indices.push_back(s);
  }
  return indices;
}

}  // namespace varbelief
