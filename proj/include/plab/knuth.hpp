#pragma once

#include <queue>
#include <set>
#include <vector>

#include "plab/tableau.hpp"
#include "plab/word.hpp"

namespace plab {

// Elementary Knuth transformations on positive-letter words:
//   j i k <-> j k i  for i < j <= k   (swap the two letters after j)
//   i k j <-> k i j  for i <= j < k   (swap the two letters before j)
// Ties are resolved positionally: of two equal letters, the one that comes
// last in the word acts as the greater.
inline std::set<Word> knuth_neighbors(const Word& w) {
  std::set<Word> out;
  for (std::size_t p = 0; p + 2 < w.size(); ++p) {
    const int a = w[p], b = w[p + 1], c = w[p + 2];
    // swap last two: (j,i,k) -> (j,k,i) needs i < j <= k; reverse needs k... ;
    // combined: min(b,c) < a <= max(b,c)
    if ((b < a && a <= c) || (c < a && a <= b)) {
      Word m = w;
      std::swap(m[p + 1], m[p + 2]);
      out.insert(std::move(m));
    }
    // swap first two: (i,k,j) -> (k,i,j) needs i <= j < k; reverse symmetric
    if ((a <= c && c < b) || (b <= c && c < a)) {
      Word m = w;
      std::swap(m[p], m[p + 1]);
      out.insert(std::move(m));
    }
  }
  return out;
}

// Words are Knuth equivalent iff they share the same insertion tableau.
inline bool knuth_equivalent(const Word& w, const Word& w2) {
  return p_tableau(w) == p_tableau(w2);
}

// Closure under elementary moves, for cross-checking knuth_equivalent on
// short words.
inline std::set<Word> knuth_class_bfs(const Word& w) {
  std::set<Word> seen{w};
  std::queue<Word> todo;
  todo.push(w);
  while (!todo.empty()) {
    Word cur = std::move(todo.front());
    todo.pop();
    for (const Word& nb : knuth_neighbors(cur))
      if (seen.insert(nb).second) todo.push(nb);
  }
  return seen;
}

}  // namespace plab
