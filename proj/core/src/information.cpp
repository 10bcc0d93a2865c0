#include "varbelief/information.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace varbelief {

double entropy(const Distribution& q) {
  double h = 0.0;
  for (double m : q.masses()) {
    if (m > 0.0) h -= m * std::log(m);
  }
  return h < 0.0 ? 0.0 : h;  // rounding can leave -1e-17 at a near-Dirac
}

double relative_entropy(const Distribution& q, const Distribution& p) {
  if (!same_space(q, p)) {
    throw std::invalid_argument("relative_entropy: distributions live on different state spaces");
  }
  double d = 0.0;
  for (std::size_t s = 0; s < q.size(); ++s) {
    const double qm = q[s];
    if (qm == 0.0) continue;  // 0 log(0/c) = 0
    const double pm = p[s];
    if (pm == 0.0) return std::numeric_limits<double>::infinity();  // q not << p
    d += qm * std::log(qm / pm);
  }
  return d;
}

double expectation(const Distribution& q, std::span<const double> g) {
  if (g.size() != q.size()) {
    throw std::invalid_argument("expectation: g has " + std::to_string(g.size()) +
                                " entries for " + std::to_string(q.size()) + " states");
  }
  double e = 0.0;
  for (std::size_t s = 0; s < q.size(); ++s) {
    if (q[s] == 0.0) continue;
    if (!std::isfinite(g[s])) {
      throw std::invalid_argument("expectation: g is not finite on state '" +
                                  q.space().label(s) + "', which has positive mass");
    }
    e += q[s] * g[s];
  }
  return e;
}

double total_variation(const Distribution& a, const Distribution& b) {
  if (!same_space(a, b)) {
    throw std::invalid_argument("total_variation: distributions live on different state spaces");
  }
  double l1 = 0.0;
  for (std::size_t s = 0; s < a.size(); ++s) {
    l1 += std::abs(a[s] - b[s]);
  }
  return 0.5 * l1;
}

}  // namespace varbelief
