#pragma once

#include <span>
#include <vector>

#include "varbelief/state_space.hpp"

namespace varbelief {

// Probability vector over a StateSpace: entries >= 0, summing to 1 within
// 1e-12. Stored masses are taken literally; an exact zero means the state is
// ruled out, not merely unlikely, so zero detection everywhere is `== 0` on
// the stored value rather than threshold-based.
class Distribution {
 public:
  Distribution(StateSpacePtr space, std::vector<double> mass);

  static Distribution uniform(StateSpacePtr space);
  static Distribution dirac(StateSpacePtr space, std::size_t state);

  const StateSpace& space() const { return *space_; }
  const StateSpacePtr& space_ptr() const { return space_; }
  std::size_t size() const { return mass_.size(); }
  double operator[](std::size_t s) const { return mass_[s]; }
  std::span<const double> masses() const { return mass_; }

 private:
  StateSpacePtr space_;
  std::vector<double> mass_;
};

// True when both values live on the same space (shared object or equal labels).
bool same_space(const Distribution& a, const Distribution& b);

// Indices of states with strictly positive mass.
std::vector<std::size_t> support(const Distribution& p);

}  // namespace varbelief
