#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "plab/permuton.hpp"
#include "plab/word.hpp"

namespace plab {

inline Component seg(ComponentKind kind, Frac x1, Frac y1, Frac x2, Frac y2, Frac mass) {
  Component c;
  c.kind = kind;
  c.x1 = x1;
  c.y1 = y1;
  c.x2 = x2;
  c.y2 = y2;
  c.mass = mass;
  c.check();
  return c;
}

// Uniform mass on the main diagonal.
inline PermutonSpec identity_spec() {
  PermutonSpec s;
  s.name = "identity";
  s.components.push_back(seg(ComponentKind::Increasing, 0, 0, 1, 1, 1));
  return s;
}

// Uniform mass on the antidiagonal.
inline PermutonSpec antidiagonal_spec() {
  PermutonSpec s;
  s.name = "antidiagonal";
  s.components.push_back(seg(ComponentKind::Decreasing, 0, 1, 1, 0, 1));
  return s;
}

// Four increasing diagonals with masses (0.2, 0.3, 0.3, 0.2). The heaviest
// single chain is D2 then D3 (mass 0.6) and the pairs {D1,D3}, {D2,D4} cover
// everything, so two chains reach mass 1.
inline PermutonSpec fig6_mu1_spec() {
  PermutonSpec s;
  s.name = "fig6-mu1";
  s.components.push_back(seg(ComponentKind::Increasing, 0, {1, 2}, {1, 5}, {7, 10}, {1, 5}));
  s.components.push_back(seg(ComponentKind::Increasing, {1, 5}, 0, {1, 2}, {3, 10}, {3, 10}));
  s.components.push_back(seg(ComponentKind::Increasing, {1, 2}, {7, 10}, {4, 5}, 1, {3, 10}));
  s.components.push_back(seg(ComponentKind::Increasing, {4, 5}, {3, 10}, 1, {1, 2}, {1, 5}));
  return s;
}

// Same chain structure with masses (0.28, 0.3, 0.3, 0.12); it shares all
// generalized subsequence functionals with fig6-mu1 but its lower tail decays
// strictly faster.
inline PermutonSpec fig6_mu2_spec() {
  PermutonSpec s;
  s.name = "fig6-mu2";
  s.components.push_back(
      seg(ComponentKind::Increasing, 0, {21, 50}, {7, 25}, {7, 10}, {7, 25}));
  s.components.push_back(
      seg(ComponentKind::Increasing, {7, 25}, 0, {29, 50}, {3, 10}, {3, 10}));
  s.components.push_back(
      seg(ComponentKind::Increasing, {29, 50}, {7, 10}, {22, 25}, 1, {3, 10}));
  s.components.push_back(
      seg(ComponentKind::Increasing, {22, 25}, {3, 10}, 1, {21, 50}, {3, 25}));
  return s;
}

// Two increasing diagonals that no single chain can join: D1 (mass 0.6) and
// D2 (mass 0.4) with D2 to the lower right of D1.
//
// Derivative bookkeeping at the corner (1,1): restricting to [0,x]x[0,1]
// clips D2 only, so the first row value stays 0.6 while the second grows like
// x; restricting to [0,1]x[0,y] clips D1 only. Hence the one-sided axis
// derivatives are alpha = (0, 1) and beta = (1, 0), and along the direction
// t = s = 1 both row increments shrink at unit speed:
//   k = 1: phi((0,1), (1,0)) = 0 v 1 v (1 ^ 0) = 1,
//   k = 2: phi((1), (0)) = 1.
inline PermutonSpec two_diag_spec() {
  PermutonSpec s;
  s.name = "two-diag";
  s.components.push_back(seg(ComponentKind::Increasing, 0, {2, 5}, {3, 5}, 1, {3, 5}));
  s.components.push_back(seg(ComponentKind::Increasing, {3, 5}, 0, 1, {2, 5}, {2, 5}));
  return s;
}

// Layered word permuton with row weights alpha = (1/4, 1/8, 1/12, 1/24),
// column weights beta = (1/6, 1/12) and neutral weight gamma = 1/4.
//
// The y-axis is split into bands ordered like the alphabet: row letters from
// below, then the neutral band, then column letters from above. Geometric
// placement along x is chosen so that the functionals come out right: the row
// diagonals step down-right (no two of them chain, so the k-chain optimum is
// the top-k alpha sum), the column diagonals sit in consecutive squares on
// the main diagonal (no two of them chain downward), and the neutral mass
// fills the square between the letter groups on the main diagonal. The
// alphabet order only fixes the bands; the x-placement is the inference
// recorded here.
inline PermutonSpec thoma_fig4_spec() {
  PermutonSpec s;
  s.name = "thoma-fig4";
  // row diagonals, y-bands [0,1/4],[1/4,3/8],[3/8,11/24],[11/24,1/2]
  s.components.push_back(seg(ComponentKind::Increasing, {1, 4}, 0, {1, 2}, {1, 4}, {1, 4}));
  s.components.push_back(seg(ComponentKind::Increasing, {1, 8}, {1, 4}, {1, 4}, {3, 8}, {1, 8}));
  s.components.push_back(
      seg(ComponentKind::Increasing, {1, 24}, {3, 8}, {1, 8}, {11, 24}, {1, 12}));
  s.components.push_back(
      seg(ComponentKind::Increasing, 0, {11, 24}, {1, 24}, {1, 2}, {1, 24}));
  // neutral block on the main diagonal
  s.components.push_back(seg(ComponentKind::Block, {1, 2}, {1, 2}, {3, 4}, {3, 4}, {1, 4}));
  // column diagonals, y-bands [3/4,5/6] and [5/6,1]
  s.components.push_back(
      seg(ComponentKind::Decreasing, {3, 4}, {5, 6}, {5, 6}, {3, 4}, {1, 12}));
  s.components.push_back(seg(ComponentKind::Decreasing, {5, 6}, 1, 1, {5, 6}, {1, 6}));
  return s;
}

// The permutation sigma embedded as uniform mass on the diagonals of its
// point cells; its chain functionals reproduce LIS_k(sigma) / n exactly.
inline PermutonSpec embedding_spec(const Permutation& sigma) {
  const int n = sigma.size();
  if (n == 0) throw std::invalid_argument("embedding_spec: empty permutation");
  PermutonSpec s;
  s.name = "embedding";
  for (int i = 1; i <= n; ++i) {
    const int j = sigma(i);
    s.components.push_back(seg(ComponentKind::Increasing, {i - 1, n}, {j - 1, n}, {i, n},
                               {j, n}, {1, n}));
  }
  return s;
}

inline std::vector<std::string> builtin_names() {
  return {"identity", "antidiagonal", "fig6-mu1", "fig6-mu2", "thoma-fig4", "two-diag"};
}

inline PermutonSpec builtin_spec(const std::string& key) {
  if (key == "identity") return identity_spec();
  if (key == "antidiagonal") return antidiagonal_spec();
  if (key == "fig6-mu1") return fig6_mu1_spec();
  if (key == "fig6-mu2") return fig6_mu2_spec();
  if (key == "thoma-fig4") return thoma_fig4_spec();
  if (key == "two-diag") return two_diag_spec();
  throw std::invalid_argument("unknown built-in spec '" + key + "'");
}

}  // namespace plab
