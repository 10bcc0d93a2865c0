#include "varbelief/parameters.hpp"

#include <cmath>
#include <stdexcept>

namespace varbelief {

ExponentParams::ExponentParams(double alpha_in, double beta_in) : alpha(alpha_in), beta(beta_in) {
  if (!std::isfinite(alpha) || alpha <= 0.0) {
    throw std::invalid_argument("ExponentParams: alpha must be a positive finite number");
  }
  if (!std::isfinite(beta) || beta <= 0.0) {
    throw std::invalid_argument("ExponentParams: beta must be a positive finite number");
  }
}

PreferenceParams::PreferenceParams(double lambda_in, double mu_in) : lambda(lambda_in), mu(mu_in) {
  if (!std::isfinite(lambda) || lambda <= 0.0) {
    throw std::invalid_argument("PreferenceParams: lambda must be a positive finite number");
  }
  if (!std::isfinite(mu)) {
    throw std::invalid_argument("PreferenceParams: mu must be finite");
  }
}

PreferenceParams exponents_to_preferences(const ExponentParams& params) {
  return {params.beta / params.alpha, 1.0 - 1.0 / params.alpha};
}

ExponentParams preferences_to_exponents(const PreferenceParams& params) {
  if (params.mu >= 1.0) {
    throw std::domain_error(
        "preferences_to_exponents: mu >= 1 is the degenerate regime with no "
        "exponential-rule counterpart; use solve_concave");
  }
  const double one_minus_mu = 1.0 - params.mu;
  return {1.0 / one_minus_mu, params.lambda / one_minus_mu};
}

}  // namespace varbelief
