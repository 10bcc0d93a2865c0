#pragma once

namespace varbelief {

// Exponents (alpha, beta) of the exponential updating rule q ∝ p^alpha f^beta.
// alpha weighs the prior, beta the evidence; both strictly positive.
struct ExponentParams {
  ExponentParams(double alpha, double beta);

  double alpha;
  double beta;
};

// Weights (lambda, mu) of the variational objective
//   D(q||p) - lambda * E_q[log f] + mu * H(q).
// lambda > 0 scales the evidence term; mu is the taste for entropy and may
// take any sign. mu >= 1 is the degenerate (concave) regime.
struct PreferenceParams {
  PreferenceParams(double lambda, double mu);

  double lambda;
  double mu;
};

// lambda = beta/alpha, mu = 1 - 1/alpha. The image always has mu < 1: every
// exponential rule lies in the convex regime.
PreferenceParams exponents_to_preferences(const ExponentParams& params);

// alpha = 1/(1-mu), beta = lambda/(1-mu); inverse of the above. Requires
// mu < 1; the mu >= 1 regime has no exponential-rule counterpart (use
// solve_concave).
ExponentParams preferences_to_exponents(const PreferenceParams& params);

}  // namespace varbelief
