#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "varbelief/distribution.hpp"
#include "varbelief/parameters.hpp"

namespace varbelief {

// One recorded update: the prior held, the likelihood column f(x|.) of the
// realized signal, and the (reported) posterior.
struct UpdateObservation {
  UpdateObservation(Distribution prior, std::vector<double> likelihood_row,
                    Distribution posterior);

  Distribution prior;
  std::vector<double> likelihood_row;
  Distribution posterior;
};

struct FitResult {
  double alpha_hat;
  double beta_hat;
  double residual_sum_squares;
  std::size_t n_equations;  // sum over observations of (|S| - 1)
  // Via the parameter map lambda = beta/alpha, mu = 1 - 1/alpha; present only
  // when both estimates are positive.
  std::optional<PreferenceParams> implied_prefs;
};

// Intercept-free OLS on the log-ratio model: for each observation and each
// state s != s0 (reference s0 = state index 0),
//   log(q(s)/q(s0)) = alpha log(p(s)/p(s0)) + beta log(f(x|s)/f(x|s0)).
// Solves the 2x2 normal equations in closed form. On noiseless data produced
// by the exponential rule the recovery is exact up to rounding.
//
// Throws std::domain_error when any probability entering a log is zero
// (naming the observation) or when the normal equations are singular
// (collinear regressors leave the parameters unidentified).
FitResult grether_fit(std::span<const UpdateObservation> observations);

}  // namespace varbelief
