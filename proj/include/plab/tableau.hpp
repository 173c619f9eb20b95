#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "plab/partition.hpp"
#include "plab/word.hpp"

namespace plab {

// Row-insertion tableau: rows weakly increasing, columns strictly increasing.
struct Tableau {
  std::vector<std::vector<int>> rows;

  // Schensted row insertion; returns the row index (1-based) of the new box.
  int insert(int x) {
    std::size_t r = 0;
    for (;; ++r) {
      if (r == rows.size()) {
        rows.push_back({x});
        return static_cast<int>(r) + 1;
      }
      auto& row = rows[r];
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        return static_cast<int>(r) + 1;
      }
      std::swap(*it, x);  // bump the leftmost entry strictly greater than x
    }
  }

  Partition shape() const {
    std::vector<int> r;
    r.reserve(rows.size());
    for (const auto& row : rows) r.push_back(static_cast<int>(row.size()));
    return Partition(std::move(r));
  }

  friend bool operator==(const Tableau& a, const Tableau& b) { return a.rows == b.rows; }
  friend bool operator!=(const Tableau& a, const Tableau& b) { return !(a == b); }
};

// Filled insertion and recording tableaux of a word with positive letters.
inline std::pair<Tableau, Tableau> rs_tableaux(const Word& w) {
  Tableau p, q;
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (w[t] <= 0) throw std::invalid_argument("rs: letters must be positive");
    int r = p.insert(w[t]);
    while (static_cast<int>(q.rows.size()) < r) q.rows.emplace_back();
    q.rows[r - 1].push_back(static_cast<int>(t) + 1);
  }
  return {p, q};
}

inline Tableau p_tableau(const Word& w) { return rs_tableaux(w).first; }

inline Partition rs_shape(const Word& w) { return p_tableau(w).shape(); }

// Growth-sequence view: the k-th diagram of p is the shape of the sub-tableau
// with letters at most k; the t-th diagram of q is the shape after t
// insertions. Both chains end at the common shape.
inline TableauPair rs_correspondence(const Word& w) {
  TableauPair out;
  Tableau p;
  out.q.chain.push_back(Partition{});
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (w[t] <= 0) throw std::invalid_argument("rs: letters must be positive");
    p.insert(w[t]);
    out.q.chain.push_back(p.shape());
  }
  const int top = max_letter(w);
  out.p.chain.assign(top + 1, Partition{});
  for (int k = 1; k <= top; ++k) {
    std::vector<int> rows;
    for (const auto& row : p.rows) {
      auto it = std::upper_bound(row.begin(), row.end(), k);
      int len = static_cast<int>(it - row.begin());
      if (len == 0) break;
      rows.push_back(len);
    }
    out.p.chain[k] = Partition(std::move(rows));
  }
  return out;
}

// Reconstructs the semistandard filling from an insertion-tableau chain:
// row i receives chain[k].row(i) - chain[k-1].row(i) copies of letter k.
inline Tableau filling_from_growth(const GrowthSequence& g) {
  Tableau t;
  t.rows.assign(g.chain.back().num_rows(), {});
  for (int k = 1; k <= g.steps(); ++k)
    for (int i = 1; i <= g.chain[k].num_rows(); ++i)
      for (int c = g.chain[k - 1].row(i); c < g.chain[k].row(i); ++c)
        t.rows[i - 1].push_back(k);
  return t;
}

}  // namespace plab
