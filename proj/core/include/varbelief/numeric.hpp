#pragma once

#include <span>
#include <vector>

namespace varbelief {

// log(sum_i exp(v[i])) with the usual max shift. -inf entries contribute
// nothing; returns -inf when the span is empty or all entries are -inf.
double log_sum_exp(std::span<const double> values);

// Normalizes exp(logw[i]) to a probability vector without leaving log space
// until the final exp. Entries at -inf come out exactly 0. Throws
// std::domain_error when every weight is zero.
std::vector<double> normalized_from_log_weights(std::span<const double> log_weights);

}  // namespace varbelief
