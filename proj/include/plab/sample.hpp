#pragma once

#include <iostream>
#include <stdexcept>
#include <vector>

#include "plab/permuton.hpp"
#include "plab/rng.hpp"
#include "plab/word.hpp"

namespace plab {

// i.i.d. points from a spec: a component is chosen proportionally to its
// mass, then a point is drawn uniformly on it.
inline Point sample_point(const PermutonSpec& spec, const std::vector<double>& cmf, Rng& rng) {
  const double u = rng.uniform() * cmf.back();
  std::size_t idx = 0;
  while (idx + 1 < cmf.size() && u >= cmf[idx]) ++idx;
  const Component& c = spec.components[idx];
  const double x1 = c.x1.to_double(), x2 = c.x2.to_double();
  const double y1 = c.y1.to_double(), y2 = c.y2.to_double();
  if (c.kind == ComponentKind::Block) {
    return {x1 + (x2 - x1) * rng.uniform(), y1 + (y2 - y1) * rng.uniform()};
  }
  const double t = rng.uniform();
  return {x1 + (x2 - x1) * t, y1 + (y2 - y1) * t};
}

inline std::vector<double> mass_cmf(const PermutonSpec& spec) {
  std::vector<double> cmf;
  double acc = 0;
  for (const auto& c : spec.components) {
    acc += c.mass.to_double();
    cmf.push_back(acc);
  }
  return cmf;
}

struct SampleResult {
  Permutation perm;
  std::vector<Point> points;
  int collision_retries = 0;
};

// Coordinate collisions have probability zero but are checked anyway; a
// colliding draw is logged and redrawn from the same stream.
inline SampleResult sample_permutation_points(const PermutonSpec& spec, int n, Rng& rng,
                                              std::ostream* log = nullptr) {
  if (n < 0) throw std::invalid_argument("sample_permutation: n must be >= 0");
  const std::vector<double> cmf = mass_cmf(spec);
  SampleResult out;
  for (int attempt = 0;; ++attempt) {
    out.points.clear();
    out.points.reserve(n);
    for (int i = 0; i < n; ++i) out.points.push_back(sample_point(spec, cmf, rng));
    try {
      out.perm = perm_from_points(out.points);
      out.collision_retries = attempt;
      return out;
    } catch (const std::invalid_argument&) {
      if (log) *log << "sample_permutation: coordinate collision, redrawing\n";
      if (attempt >= 64)
        throw std::runtime_error("sample_permutation: persistent coordinate collisions");
    }
  }
}

inline Permutation sample_permutation(const PermutonSpec& spec, int n, std::uint64_t seed) {
  Rng rng(splitmix64(seed));
  return sample_permutation_points(spec, n, rng, &std::cerr).perm;
}

}  // namespace plab
