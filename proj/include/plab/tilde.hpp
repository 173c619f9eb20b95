#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "plab/fraction.hpp"
#include "plab/greene.hpp"
#include "plab/permuton.hpp"

namespace plab {

// Raised when two increasing segments neither chain as wholes nor exclude
// each other: the exact optimum could then need partial segments, which this
// solver does not attempt. Callers fall back to the discretized oracle.
struct NotNonCrossing : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SpecTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

// a chains before b as whole segments: every point of a is weakly southwest
// of every point of b.
inline bool chains_before(const Component& a, const Component& b) {
  return a.xhi() <= b.xlo() && a.yhi() <= b.ylo();
}

// Some positive-mass piece of a can precede some positive-mass piece of b in
// one nondecreasing set (strict inequalities: touching at a corner carries no
// mass).
inline bool partial_before(const Component& a, const Component& b) {
  return a.xlo() < b.xhi() && a.ylo() < b.yhi();
}

inline constexpr int kMaxExactComponents = 14;

// Maximum antichain size for every subset of a poset given as a comparability
// matrix, by subset recursion on the lowest element.
inline std::vector<std::int8_t> max_antichain_table(const std::vector<std::uint32_t>& comp) {
  const int m = static_cast<int>(comp.size());
  std::vector<std::int8_t> table(std::size_t(1) << m, 0);
  for (std::uint32_t s = 1; s < table.size(); ++s) {
    const int e = __builtin_ctz(s);
    const std::uint32_t without = s & (s - 1);
    const std::int8_t skip = table[without];
    const std::int8_t take = static_cast<std::int8_t>(1 + table[without & ~comp[e]]);
    table[s] = std::max(skip, take);
  }
  return table;
}

}  // namespace detail

// Exact k-chain optimum over the increasing segments of a spec. Decreasing
// segments and blocks contribute nothing to a nondecreasing closed set.
// Requires the non-crossing condition; the optimum then selects whole
// segments, and a set of segments is a union of k chains iff it contains no
// antichain larger than k.
inline Frac lis_tilde_exact_frac(const PermutonSpec& spec, int k) {
  if (k < 1) throw std::invalid_argument("lis_tilde_exact: k must be >= 1");
  std::vector<Component> segs;
  for (const auto& c : spec.components)
    if (c.kind == ComponentKind::Increasing) segs.push_back(c);
  const int m = static_cast<int>(segs.size());
  if (m == 0) return Frac(0);
  if (m > detail::kMaxExactComponents)
    throw SpecTooLarge("lis_tilde_exact: more than " +
                       std::to_string(detail::kMaxExactComponents) + " increasing segments");

  std::vector<std::uint32_t> comparable(m, 0);
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      const bool ab = detail::chains_before(segs[a], segs[b]);
      const bool ba = detail::chains_before(segs[b], segs[a]);
      if (!ab && detail::partial_before(segs[a], segs[b]))
        throw NotNonCrossing("increasing segments " + std::to_string(a) + " and " +
                             std::to_string(b) + " cross");
      if (!ba && detail::partial_before(segs[b], segs[a]))
        throw NotNonCrossing("increasing segments " + std::to_string(b) + " and " +
                             std::to_string(a) + " cross");
      if (ab || ba) {
        comparable[a] |= 1u << b;
        comparable[b] |= 1u << a;
      }
    }
  }

  const std::vector<std::int8_t> antichain = detail::max_antichain_table(comparable);
  Frac best(0);
  for (std::uint32_t s = 0; s < antichain.size(); ++s) {
    if (antichain[s] > k) continue;
    Frac mass(0);
    for (int e = 0; e < m; ++e)
      if (s & (1u << e)) mass += segs[e].mass;
    if (best < mass) best = mass;
  }
  return best;
}

inline double lis_tilde_exact(const PermutonSpec& spec, int k) {
  return lis_tilde_exact_frac(spec, k).to_double();
}

inline Frac lds_tilde_exact_frac(const PermutonSpec& spec, int k) {
  return lis_tilde_exact_frac(mirror(spec), k);
}

inline double lds_tilde_exact(const PermutonSpec& spec, int k) {
  return lds_tilde_exact_frac(spec, k).to_double();
}

// Discretization oracle for configurations the exact solver rejects: each
// component is replaced by round(mass * m) equally spaced atoms of weight
// 1/m, and the weighted functional is read off the Greene invariants of the
// induced word. Each chain picks up at most one stray atom per segment but a
// whole staircase (cols + rows atoms) from a block lattice, which sets the
// reported additive error bound.
struct DiscretizedValue {
  double value = 0;
  double error_bound = 0;
};

inline DiscretizedValue lis_tilde_discretized(const PermutonSpec& spec, int k, int m) {
  if (m < 10) throw std::invalid_argument("lis_tilde_discretized: need m >= 10");
  if (k < 1) throw std::invalid_argument("lis_tilde_discretized: k must be >= 1");
  struct Atom {
    double x, y;
  };
  std::vector<Atom> atoms;
  long per_chain_slack = 0;
  for (const auto& c : spec.components) {
    const double mass = c.mass.to_double();
    const long cnt = std::max<long>(1, std::lround(mass * m));
    const double x1 = c.x1.to_double(), x2 = c.x2.to_double();
    const double y1 = c.y1.to_double(), y2 = c.y2.to_double();
    if (c.kind == ComponentKind::Block) {
      // lattice layout, close to square
      long cols = std::max<long>(1, std::lround(std::sqrt(static_cast<double>(cnt))));
      long rows = (cnt + cols - 1) / cols;
      long placed = 0;
      for (long a = 0; a < cols && placed < cnt; ++a)
        for (long b = 0; b < rows && placed < cnt; ++b, ++placed)
          atoms.push_back({x1 + (x2 - x1) * (a + 0.5) / cols, y1 + (y2 - y1) * (b + 0.5) / rows});
      per_chain_slack += cols + rows;
    } else {
      for (long a = 0; a < cnt; ++a) {
        const double t = (a + 0.5) / cnt;
        atoms.push_back({x1 + (x2 - x1) * t, y1 + (y2 - y1) * t});
      }
      per_chain_slack += 1;
    }
  }
  std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  });
  // letters = y-ranks; equal y-values share one letter so both can join a
  // nondecreasing subsequence
  std::vector<double> ys;
  ys.reserve(atoms.size());
  for (const auto& a : atoms) ys.push_back(a.y);
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  Word word;
  word.reserve(atoms.size());
  for (const auto& a : atoms)
    word.push_back(
        static_cast<int>(std::lower_bound(ys.begin(), ys.end(), a.y) - ys.begin()) + 1);
  DiscretizedValue out;
  out.value = static_cast<double>(lis_k(word, k)) / m;
  out.error_bound = (static_cast<double>(k) * static_cast<double>(per_chain_slack) +
                     static_cast<double>(spec.components.size())) /
                    m;
  return out;
}

// Row and column limit shapes: successive differences of the k-chain optima.
struct Shape {
  std::vector<Frac> alpha;
  std::vector<Frac> beta;

  std::vector<double> alpha_doubles() const {
    std::vector<double> v;
    for (const auto& f : alpha) v.push_back(f.to_double());
    return v;
  }
  std::vector<double> beta_doubles() const {
    std::vector<double> v;
    for (const auto& f : beta) v.push_back(f.to_double());
    return v;
  }
};

inline Shape sh_tilde(const PermutonSpec& spec, int kmax) {
  Shape s;
  Frac prev_a(0), prev_b(0);
  for (int k = 1; k <= kmax; ++k) {
    const Frac a = lis_tilde_exact_frac(spec, k);
    const Frac b = lds_tilde_exact_frac(spec, k);
    s.alpha.push_back(a - prev_a);
    s.beta.push_back(b - prev_b);
    prev_a = a;
    prev_b = b;
  }
  return s;
}

// Generalized tableau function: lambda_k(x, y) is the k-th row of the limit
// shape of the spec restricted to [0,x] x [0,y]. Nondecreasing and
// 1-Lipschitz in each variable.
class LambdaTilde {
 public:
  explicit LambdaTilde(PermutonSpec spec) : spec_(std::move(spec)) {}

  Frac value(const Frac& x, const Frac& y, int k) const {
    const PermutonSpec r = restrict_spec(spec_, x, y);
    if (r.components.empty()) return Frac(0);
    const Frac hi = lis_tilde_exact_frac(r, k);
    const Frac lo = (k == 1) ? Frac(0) : lis_tilde_exact_frac(r, k - 1);
    return hi - lo;
  }

  double value(double x, double y, int k) const {
    return value(Frac::from_double(x), Frac::from_double(y), k).to_double();
  }

  // Smallest r with LIS_r equal to the full increasing mass of the spec.
  int saturation_index(int cap = 16) const {
    Frac full(0);
    for (const auto& c : spec_.components)
      if (c.kind == ComponentKind::Increasing) full += c.mass;
    for (int r = 1; r <= cap; ++r)
      if (lis_tilde_exact_frac(spec_, r) == full) return r;
    return cap;
  }

  const PermutonSpec& spec() const { return spec_; }

 private:
  PermutonSpec spec_;
};

}  // namespace plab
