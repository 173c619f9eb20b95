#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "plab/fomin.hpp"
#include "plab/tableau.hpp"
#include "plab/word.hpp"

namespace plab {

// blocks(q) is the concatenation of ell nondecreasing words over {0..r}:
// block i contributes q(i,0) zeros, then q(i,1) ones, ..., then q(i,r) r's.
struct BlockArray {
  int ell = 0;
  int r = 0;
  std::vector<std::vector<int>> q;  // q[i][k], 0-based block index, letter 0..r

  BlockArray() = default;
  BlockArray(int ell_, int r_) : ell(ell_), r(r_), q(ell_, std::vector<int>(r_ + 1, 0)) {
    if (ell_ < 1 || r_ < 1) throw std::invalid_argument("BlockArray: ell and r must be >= 1");
  }

  int& at(int i, int k) { return q[i - 1][k]; }  // 1-based block, letter 0..r
  int at(int i, int k) const { return q[i - 1][k]; }

  bool same_shape(const BlockArray& o) const { return ell == o.ell && r == o.r; }

  friend bool operator==(const BlockArray& a, const BlockArray& b) {
    return a.ell == b.ell && a.r == b.r && a.q == b.q;
  }

  void write_csv(std::ostream& os) const {
    os << "i,k,q\n";
    for (int i = 1; i <= ell; ++i)
      for (int k = 0; k <= r; ++k) os << i << ',' << k << ',' << at(i, k) << '\n';
  }
};

inline Word blocks_encode(const BlockArray& b) {
  Word w;
  for (int i = 1; i <= b.ell; ++i)
    for (int k = 0; k <= b.r; ++k)
      for (int c = 0; c < b.at(i, k); ++c) w.push_back(k);
  return w;
}

// Applying a letter to a block word never breaks the block structure: each
// decrement turns the first `cur` of some block into cur-1, and consecutive
// decrements land in strictly later blocks. This mirrors apply_letter on the
// encoded word.
inline int apply_letter_blocks_inplace(BlockArray& b, int k) {
  int cur = k;
  int from = 1;
  while (cur > 0) {
    if (cur > b.r) return cur;  // no such letter exists in any block
    int blk = 0;
    for (int i = from; i <= b.ell; ++i)
      if (b.at(i, cur) > 0) {
        blk = i;
        break;
      }
    if (blk == 0) return cur;
    b.at(blk, cur) -= 1;
    b.at(blk, cur - 1) += 1;
    from = blk + 1;
    --cur;
  }
  return 0;
}

inline BlockArray fbot_blocks(BlockArray b, const Word& right) {
  for (int k : right) apply_letter_blocks_inplace(b, k);
  return b;
}

// Pseudo-distance delta(q, q') = sum |q - q'| * k * (8 k^2)^(ell - i) over
// blocks i and positive letters k.
inline long long delta_distance(const BlockArray& a, const BlockArray& b) {
  if (!a.same_shape(b)) throw std::invalid_argument("delta_distance: shape mismatch");
  long long total = 0;
  for (int i = 1; i <= a.ell; ++i) {
    for (int k = 1; k <= a.r; ++k) {
      long long weight = k;
      for (int e = 0; e < a.ell - i; ++e) weight *= 8LL * k * k;
      total += weight * std::abs(a.at(i, k) - b.at(i, k));
    }
  }
  return total;
}

// The array q(w): q(i,k) counts the k's in row (r - i + 1) of the insertion
// tableau of w, so blocks(q(w)) is the row word of P(w) (rows read from last
// to first), a distinguished member of w's Knuth class.
inline BlockArray row_word(const Word& w, int r) {
  if (r < 1) throw std::invalid_argument("row_word: r must be >= 1");
  for (int x : w)
    if (x < 1 || x > r) throw std::domain_error("row_word: letter outside {1..r}");
  const Tableau p = p_tableau(w);
  BlockArray b(r, r);
  for (int i = 1; i <= r; ++i) {
    const int row = r - i + 1;
    if (row <= static_cast<int>(p.rows.size()))
      for (int x : p.rows[row - 1]) b.at(i, x) += 1;
  }
  return b;
}

}  // namespace plab
