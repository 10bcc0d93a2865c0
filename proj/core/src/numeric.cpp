#include "varbelief/numeric.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace varbelief {

double log_sum_exp(std::span<const double> values) {
  double max = -std::numeric_limits<double>::infinity();
  for (double v : values) {
    if (v > max) max = v;
  }
  if (max == -std::numeric_limits<double>::infinity()) return max;
  double sum = 0.0;
  for (double v : values) {
    sum += std::exp(v - max);  // exp(-inf) == 0
  }
  return max + std::log(sum);
}

std::vector<double> normalized_from_log_weights(std::span<const double> log_weights) {
  double max = -std::numeric_limits<double>::infinity();
  for (double w : log_weights) {
    if (w > max) max = w;
  }
  if (max == -std::numeric_limits<double>::infinity()) {
    throw std::domain_error("normalized_from_log_weights: every weight is zero");
  }
  std::vector<double> out(log_weights.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = std::exp(log_weights[i] - max);
    sum += out[i];
  }
  for (double& v : out) v /= sum;
  return out;
}

}  // namespace varbelief
