#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "plab/partition.hpp"
#include "plab/word.hpp"

namespace plab {

// Edge labels of the growth construction on the grid [0..n] x [0..n].
//
// Conventions used throughout:
//   h[i][j] labels the horizontal edge from (i-1, j) to (i, j), 1 <= i <= n;
//   v[i][j] labels the vertical edge from (i, j-1) to (i, j), 1 <= j <= n;
//   cell (i, j) = [i-1, i] x [j-1, j] holds a point iff sigma(i) = j.
//
// Border words are read right-to-left on horizontal sides and top-to-bottom
// on vertical sides, so the first letter of a top-word sits at the north-east
// corner of its rectangle.
struct EdgeGrid {
  int n = 0;
  std::vector<std::vector<int>> h;  // h[i][j], valid for i >= 1
  std::vector<std::vector<int>> v;  // v[i][j], valid for j >= 1
  std::vector<std::pair<int, int>> points;

  Word top_word(int i0, int j0, int i1, int j1) const {
    check_rect(i0, j0, i1, j1);
    Word w;
    for (int i = i1; i > i0; --i) w.push_back(h[i][j1]);
    return w;
  }
  Word bottom_word(int i0, int j0, int i1, int j1) const {
    check_rect(i0, j0, i1, j1);
    Word w;
    for (int i = i1; i > i0; --i) w.push_back(h[i][j0]);
    return w;
  }
  Word right_word(int i0, int j0, int i1, int j1) const {
    check_rect(i0, j0, i1, j1);
    Word w;
    for (int j = j1; j > j0; --j) w.push_back(v[i1][j]);
    return w;
  }
  Word left_word(int i0, int j0, int i1, int j1) const {
    check_rect(i0, j0, i1, j1);
    Word w;
    for (int j = j1; j > j0; --j) w.push_back(v[i0][j]);
    return w;
  }

 private:
  void check_rect(int i0, int j0, int i1, int j1) const {
    if (i0 < 0 || j0 < 0 || i1 > n || j1 > n || i0 > i1 || j0 > j1)
      throw std::out_of_range("EdgeGrid: bad rectangle");
  }
};

// Direct local rules, bottom-left to top-right.
inline EdgeGrid fomin_direct(const Permutation& sigma) {
  const int n = sigma.size();
  EdgeGrid g;
  g.n = n;
  g.h.assign(n + 1, std::vector<int>(n + 1, 0));
  g.v.assign(n + 1, std::vector<int>(n + 1, 0));
  for (int i = 1; i <= n; ++i) g.points.emplace_back(i, sigma(i));
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i <= n; ++i) {
      const int s = g.h[i][j - 1];
      const int w = g.v[i - 1][j];
      int north, east;
      if (s == w) {
        if (s == 0)
          north = east = (sigma(i) == j) ? 1 : 0;
        else
          north = east = s + 1;
      } else {
        north = s;
        east = w;
      }
      g.h[i][j] = north;
      g.v[i][j] = east;
    }
  }
  return g;
}

// Applies one letter to a word (inverse rules for one grid row, processed
// from the east side). Applying k >= 1 turns the first k into k-1, then
// applies k-1 to the suffix after it; the residual is the letter that leaves
// on the west side: 0 if the chain of decrements was fully absorbed, else the
// value that found no match.
inline int apply_letter_inplace(Word& w, int k) {
  int cur = k;
  std::size_t from = 0;
  while (cur > 0) {
    std::size_t pos = from;
    while (pos < w.size() && w[pos] != cur) ++pos;
    if (pos == w.size()) return cur;
    w[pos] = cur - 1;
    from = pos + 1;
    --cur;
  }
  return 0;
}

inline std::pair<Word, int> apply_letter(Word w, int k) {
  int residual = apply_letter_inplace(w, k);
  return {std::move(w), residual};
}

struct InversePair {
  Word bottom;
  Word left;
};

// The map F: letters of the right-word are applied top to bottom; the i-th
// residual is the i-th letter of the left-word.
inline InversePair fomin_inverse(const Word& top, const Word& right) {
  InversePair out;
  out.bottom = top;
  out.left.reserve(right.size());
  for (int k : right) out.left.push_back(apply_letter_inplace(out.bottom, k));
  return out;
}

// Same, but verifies label-count conservation between in- and out-words on
// every evaluation (#h left + #h top == #h bottom + #h right for all h >= 1).
inline InversePair fomin_inverse_checked(const Word& top, const Word& right) {
  InversePair out = fomin_inverse(top, right);
  int hmax = std::max(max_letter(top), max_letter(right));
  hmax = std::max(hmax, std::max(max_letter(out.bottom), max_letter(out.left)));
  for (int h = 1; h <= hmax; ++h) {
    if (count_letter(out.left, h) + count_letter(top, h) !=
        count_letter(out.bottom, h) + count_letter(right, h))
      throw std::logic_error("fomin_inverse: label-count conservation violated");
  }
  return out;
}

// Reconstructs the full grid from the north and east border words of an
// n x n grid (top read right-to-left, right read top-to-bottom).
inline EdgeGrid fomin_inverse_grid(const Word& top, const Word& right) {
  if (top.size() != right.size())
    throw std::invalid_argument("fomin_inverse_grid: border words must have equal length");
  const int n = static_cast<int>(top.size());
  EdgeGrid g;
  g.n = n;
  g.h.assign(n + 1, std::vector<int>(n + 1, 0));
  g.v.assign(n + 1, std::vector<int>(n + 1, 0));
  for (int i = 1; i <= n; ++i) g.h[i][n] = top[n - i];
  for (int j = 1; j <= n; ++j) g.v[n][j] = right[n - j];
  for (int j = n; j >= 1; --j) {
    int east = g.v[n][j];
    for (int i = n; i >= 1; --i) {
      const int north = g.h[i][j];
      int south, west;
      if (north == east) {
        south = west = (north == 0) ? 0 : north - 1;
        if (north == 1) g.points.emplace_back(i, j);
      } else {
        south = north;
        west = east;
      }
      g.h[i][j - 1] = south;
      g.v[i - 1][j] = west;
      east = west;
    }
  }
  std::sort(g.points.begin(), g.points.end());
  return g;
}

// The reconstructed points form a permutation iff there is exactly one per
// row and per column.
inline std::optional<Permutation> perm_from_grid(const EdgeGrid& g) {
  std::vector<int> one_line(g.n, 0);
  if (static_cast<int>(g.points.size()) != g.n) return std::nullopt;
  for (auto [i, j] : g.points) {
    if (one_line[i - 1] != 0) return std::nullopt;
    one_line[i - 1] = j;
  }
  try {
    return Permutation(one_line);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

// Certified lower bound on the pseudo-distance dist_F: the supremum over
// applied words is restricted to right-words of length <= max_len over
// letters {1..max_letter}. Equality with dist_F is never claimed.
inline long fomin_distance_bound(const Word& w, const Word& w2, int max_len, int max_letter_bound) {
  const int hmax = std::max({max_letter_bound, max_letter(w), max_letter(w2)});
  long best = 0;
  // DFS over right-word prefixes, reusing the partially applied words.
  struct Frame {
    Word a, b;
    int depth;
  };
  std::vector<Frame> stack;
  stack.push_back({w, w2, 0});
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    for (int h = 1; h <= hmax; ++h)
      best = std::max(best, std::abs(count_letter(f.a, h) - count_letter(f.b, h)));
    if (f.depth == max_len) continue;
    for (int k = 1; k <= max_letter_bound; ++k) {
      Frame child{f.a, f.b, f.depth + 1};
      apply_letter_inplace(child.a, k);
      apply_letter_inplace(child.b, k);
      stack.push_back(std::move(child));
    }
  }
  return best;
}

// Vertex diagrams: the partition at vertex (i, j) counts the k-labeled edges
// on any monotone path from the origin, i.e. the shape of the sub-word with
// positions <= i and values <= j.
class LambdaGrid {
 public:
  explicit LambdaGrid(const Permutation& sigma) : n_(sigma.size()) {
    const EdgeGrid g = fomin_direct(sigma);
    at_.assign(n_ + 1, std::vector<Partition>(n_ + 1));
    for (int j = 1; j <= n_; ++j) {
      for (int i = 0; i <= n_; ++i) {
        const int label = g.v[i][j];
        at_[i][j] = (label == 0) ? at_[i][j - 1] : at_[i][j - 1].with_box(label);
      }
    }
  }

  int n() const { return n_; }
  const Partition& shape_at(int i, int j) const { return at_.at(i).at(j); }
  int value(int i, int j, int k) const { return shape_at(i, j).row(k); }

  void write_csv(std::ostream& os) const {
    os << "i,j,k,value\n";
    for (int i = 0; i <= n_; ++i)
      for (int j = 0; j <= n_; ++j)
        for (int k = 1; k <= at_[i][j].num_rows(); ++k)
          os << i << ',' << j << ',' << k << ',' << at_[i][j].row(k) << '\n';
  }

 private:
  int n_;
  std::vector<std::vector<Partition>> at_;
};

}  // namespace plab
