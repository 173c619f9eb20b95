#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace plab {

// Legendre transform of the Bernoulli(p) law:
//   q log(q/p) + (1-q) log((1-q)/(1-p)),
// with the conventions 0 log 0 = 0 and value +infinity when q charges an
// outcome that p excludes. Zero exactly at q = p.
inline double legendre_bernoulli(double p, double q) {
  if (!(p >= 0.0 && p <= 1.0 && q >= 0.0 && q <= 1.0))
    throw std::domain_error("legendre_bernoulli: arguments must lie in [0,1]");
  constexpr double inf = std::numeric_limits<double>::infinity();
  double total = 0.0;
  if (q > 0.0) {
    if (p == 0.0) return inf;
    total += q * std::log(q / p);
  }
  if (q < 1.0) {
    if (p == 1.0) return inf;
    total += (1.0 - q) * std::log((1.0 - q) / (1.0 - p));
  }
  return total < 0.0 ? 0.0 : total;  // clamp tiny negative roundoff at q == p
}

struct BernoulliRate {
  double p = 0.5;
  double operator()(double q) const { return legendre_bernoulli(p, q); }
};

}  // namespace plab
