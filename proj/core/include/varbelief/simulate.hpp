#pragma once

#include <cstdint>
#include <vector>

#include "varbelief/estimation.hpp"
#include "varbelief/experiment.hpp"
#include "varbelief/parameters.hpp"

namespace varbelief {

// Generates n observations under the exponential rule `params`: each draws a
// strictly positive prior (flat Dirichlet floored at 1e-6), a signal from
// the implied marginal, and the resulting posterior. With noise_scale > 0
// the posterior's log-ratios to state 0 get zero-mean Gaussian noise of that
// standard deviation before renormalization, so the perturbation respects
// the log-linear regression model.
//
// Deterministic: the same seed reproduces the dataset bit for bit.
std::vector<UpdateObservation> simulate_dataset(std::uint64_t seed, const Experiment& experiment,
                                                const ExponentParams& params, std::size_t n,
                                                double noise_scale);

}  // namespace varbelief
