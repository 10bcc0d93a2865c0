#include "varbelief/estimation.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace varbelief {

UpdateObservation::UpdateObservation(Distribution prior_in, std::vector<double> likelihood_row_in,
                                     Distribution posterior_in)
    : prior(std::move(prior_in)),
      likelihood_row(std::move(likelihood_row_in)),
      posterior(std::move(posterior_in)) {
  if (!same_space(prior, posterior)) {
    throw std::invalid_argument(
        "UpdateObservation: prior and posterior live on different state spaces");
  }
  if (likelihood_row.size() != prior.size()) {
    throw std::invalid_argument("UpdateObservation: likelihood row has " +
                                std::to_string(likelihood_row.size()) + " entries for " +
                                std::to_string(prior.size()) + " states");
  }
  for (std::size_t s = 0; s < likelihood_row.size(); ++s) {
    if (!std::isfinite(likelihood_row[s]) || likelihood_row[s] < 0.0) {
      throw std::invalid_argument("UpdateObservation: likelihood_row[" + std::to_string(s) +
                                  "] must be a finite nonnegative number");
    }
  }
}

namespace {

void check_positive(double value, std::size_t obs, const char* field, std::size_t state) {
  if (value <= 0.0) {
    throw std::domain_error("grether_fit: observation " + std::to_string(obs) + ": zero " +
                            "probability in " + field + "[" + std::to_string(state) +
                            "] (all entries entering logs must be positive)");
  }
}

}  // namespace

FitResult grether_fit(std::span<const UpdateObservation> observations) {
  if (observations.empty()) {
    throw std::invalid_argument("grether_fit: needs at least one observation");
  }

  // Stack one equation per non-reference state per observation.
  std::vector<double> us, vs, ys;
  for (std::size_t i = 0; i < observations.size(); ++i) {
    const auto& o = observations[i];
    const std::size_t n = o.prior.size();
    for (std::size_t s = 0; s < n; ++s) {
      check_positive(o.prior[s], i, "prior", s);
      check_positive(o.likelihood_row[s], i, "likelihood", s);
      check_positive(o.posterior[s], i, "posterior", s);
    }
    for (std::size_t s = 1; s < n; ++s) {
      us.push_back(std::log(o.prior[s] / o.prior[0]));
      vs.push_back(std::log(o.likelihood_row[s] / o.likelihood_row[0]));
      ys.push_back(std::log(o.posterior[s] / o.posterior[0]));
    }
  }

  double suu = 0.0, svv = 0.0, suv = 0.0, suy = 0.0, svy = 0.0;
  for (std::size_t e = 0; e < us.size(); ++e) {
    suu += us[e] * us[e];
    svv += vs[e] * vs[e];
    suv += us[e] * vs[e];
    suy += us[e] * ys[e];
    svy += vs[e] * ys[e];
  }
  const double det = suu * svv - suv * suv;
  if (suu <= 0.0 || svv <= 0.0 || det <= 1e-12 * suu * svv) {
    throw std::domain_error(
        "grether_fit: singular normal equations (regressors collinear or constant); "
        "alpha and beta are unidentified");
  }

  FitResult fit;
  fit.alpha_hat = (svv * suy - suv * svy) / det;
  fit.beta_hat = (suu * svy - suv * suy) / det;
  fit.n_equations = us.size();
  fit.residual_sum_squares = 0.0;
  for (std::size_t e = 0; e < us.size(); ++e) {
    const double r = ys[e] - fit.alpha_hat * us[e] - fit.beta_hat * vs[e];
    fit.residual_sum_squares += r * r;
  }
  if (fit.alpha_hat > 0.0 && fit.beta_hat > 0.0) {
    fit.implied_prefs = exponents_to_preferences(ExponentParams(fit.alpha_hat, fit.beta_hat));
  }
  return fit;
}

}  // namespace varbelief
