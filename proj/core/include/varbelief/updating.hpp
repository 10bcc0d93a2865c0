#pragma once

#include <span>

#include "varbelief/distribution.hpp"
#include "varbelief/experiment.hpp"
#include "varbelief/parameters.hpp"

namespace varbelief {

// All updating rules run in log space with max-shifted normalization, so
// exponents far from 1 cannot underflow, and states carrying zero prior or
// zero likelihood come out with mass exactly 0 (the convention 0^c = 0 for
// c > 0: updated beliefs do not invent new states).

// q(s) = f(x|s) p(s) / sum_s' f(x|s') p(s').
// Throws std::domain_error when the marginal of the signal is zero (the
// scenario is inconsistent: the signal cannot occur under the prior).
Distribution bayes_update(const Distribution& prior, const Experiment& f, std::size_t signal);

// Same rule fed a raw likelihood column f(x|.) over states.
Distribution bayes_update(const Distribution& prior, std::span<const double> likelihood_row);

// q(s) ∝ p(s)^alpha f(x|s)^beta, normalized. With alpha = beta = 1 this is
// Bayes. Throws std::domain_error when every state has zero weight.
Distribution exponential_update(const Distribution& prior, const Experiment& f,
                                std::size_t signal, const ExponentParams& params);

// Raw-column overload; the column need not be normalized (the rule only
// depends on the likelihood up to a positive factor).
Distribution exponential_update(const Distribution& prior, std::span<const double> likelihood_row,
                                const ExponentParams& params);

// q(s) ∝ exp(-g(s)): the unique minimizer of E_q g - H(q) over the simplex.
// States with g = +inf are excluded and get mass exactly 0; g must be finite
// or +inf per entry and finite somewhere.
Distribution gibbs_from_potential(StateSpacePtr space, std::span<const double> potential);

}  // namespace varbelief
