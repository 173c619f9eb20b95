#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "plab/permuton.hpp"
#include "plab/tilde.hpp"

namespace plab {

// Exact small-n event probabilities. Conditional on the vector of per-point
// component choices, the chain functionals of a sample depend only on the
// counts whenever the spec is made of segments that pairwise either chain as
// wholes or exclude each other: points inside one segment are totally ordered
// and cross-segment compatibility never depends on positions. The component
// choice is a product measure, so summing multinomial weights over count
// vectors integrates the event exactly.
class ExactEnumerator {
 public:
  explicit ExactEnumerator(const PermutonSpec& spec) : spec_(spec) {
    const int m = static_cast<int>(spec.components.size());
    if (m == 0) throw std::invalid_argument("exact enumeration: empty spec");
    if (m > 16) throw SpecTooLarge("exact enumeration: too many components");
    for (const auto& c : spec.components) {
      if (c.kind == ComponentKind::Block)
        throw std::invalid_argument("exact enumeration: blocks are position-dependent");
      // A decreasing segment feeds at most one point into each of the k
      // chains, so its contribution is not a function of counts once other
      // components are present; it is only supported on its own.
      if (c.kind == ComponentKind::Decreasing && m > 1)
        throw std::invalid_argument(
            "exact enumeration: decreasing segments supported only as the sole component");
      masses_.push_back(c.mass.to_double());
    }
    lone_decreasing_ = spec.components[0].kind == ComponentKind::Decreasing;
    comparable_.assign(m, 0);
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        if (a == b) continue;
        const auto& ca = spec_.components[a];
        const auto& cb = spec_.components[b];
        const bool whole = detail::chains_before(ca, cb);
        const bool partial = detail::partial_before(ca, cb);
        if (!whole && partial)
          throw NotNonCrossing("exact enumeration: position-dependent component pair");
        if (whole && b > a) {
          comparable_[a] |= 1u << b;
          comparable_[b] |= 1u << a;
        }
      }
    }
    antichain_ = detail::max_antichain_table(comparable_);
  }

  // LIS_k of any sample with the given per-component point counts.
  long lis_counts(const std::vector<long>& counts, int k) const {
    if (lone_decreasing_) return std::min<long>(counts[0], k);
    const int m = static_cast<int>(counts.size());
    long best = 0;
    for (std::uint32_t s = 0; s < antichain_.size(); ++s) {
      if (antichain_[s] > k) continue;
      long total = 0;
      for (int e = 0; e < m; ++e)
        if (s & (1u << e)) total += counts[e];
      best = std::max(best, total);
    }
    return best;
  }

  // Sum of multinomial weights of all count vectors where the event holds.
  double probability(long n, const std::function<bool(const std::vector<long>&)>& event) const {
    const int m = static_cast<int>(masses_.size());
    std::vector<long> counts(m, 0);
    std::vector<double> logmass(m);
    for (int c = 0; c < m; ++c) logmass[c] = std::log(masses_[c]);
    double total = 0.0;
    std::function<void(int, long, double)> rec = [&](int c, long left, double logw) {
      if (c == m - 1) {
        counts[c] = left;
        if (event(counts))
          total += std::exp(logw + left * logmass[c] - std::lgamma(left + 1.0));
        return;
      }
      for (long take = 0; take <= left; ++take) {
        counts[c] = take;
        rec(c + 1, left - take, logw + take * logmass[c] - std::lgamma(take + 1.0));
      }
    };
    rec(0, n, std::lgamma(n + 1.0));
    return total;
  }

  double prob_lis_ge(long n, int k, double threshold) const {
    return probability(
        n, [&](const std::vector<long>& c) { return lis_counts(c, k) >= threshold; });
  }
  double prob_lis_lt(long n, int k, double threshold) const {
    return probability(
        n, [&](const std::vector<long>& c) { return lis_counts(c, k) < threshold; });
  }
  // The sample is the identity permutation iff one chain carries every point.
  double prob_identity(long n) const {
    return probability(n, [&](const std::vector<long>& c) { return lis_counts(c, 1) == n; });
  }

 private:
  PermutonSpec spec_;
  std::vector<double> masses_;
  std::vector<std::uint32_t> comparable_;
  std::vector<std::int8_t> antichain_;
  bool lone_decreasing_ = false;
};

// Exact binomial upper tail P(Bin(n, p) >= m), used as the anchor every
// upper-tail estimate must dominate.
inline double binomial_tail_ge(long n, double p, long m) {
  if (m <= 0) return 1.0;
  if (m > n) return 0.0;
  if (p <= 0.0) return 0.0;
  if (p >= 1.0) return 1.0;
  double total = 0.0;
  for (long i = m; i <= n; ++i) {
    const double logterm = std::lgamma(n + 1.0) - std::lgamma(i + 1.0) -
                           std::lgamma(n - i + 1.0) + i * std::log(p) +
                           (n - i) * std::log1p(-p);
    total += std::exp(logterm);
  }
  return std::min(total, 1.0);
}

}  // namespace plab
