#pragma once

#include <span>

#include "varbelief/distribution.hpp"

namespace varbelief {

// Shannon entropy -sum q log q in nats, with the convention 0 log 0 = 0.
// Lies in [0, log |S|]: 0 at a Dirac, log |S| at the uniform distribution.
double entropy(const Distribution& q);

// Kullback-Leibler divergence sum q log(q/p) in nats, with 0 log(0/c) = 0.
// Returns +infinity when q is not absolutely continuous w.r.t. p (some
// q(s) > 0 with p(s) = 0); nonnegative otherwise, 0 iff q == p.
double relative_entropy(const Distribution& q, const Distribution& p);

// sum over support(q) of q(s) g(s). Off-support values of g are never
// touched, so g may be +/-infinity there; a non-finite g on the support is
// an error.
double expectation(const Distribution& q, std::span<const double> g);

// Half the L1 distance between two distributions on the same space.
double total_variation(const Distribution& a, const Distribution& b);

}  // namespace varbelief
