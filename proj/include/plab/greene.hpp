#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "plab/tableau.hpp"
#include "plab/word.hpp"

namespace plab {

// Greene invariants from the RS shape: lis[k-1] = LIS_k (nondecreasing unions),
// lds[k-1] = LDS_k (strictly decreasing unions). Zero letters are ignored.
struct GreeneTable {
  std::vector<long> lis;
  std::vector<long> lds;
};

inline GreeneTable greene_invariants(const Word& w, int kmax) {
  if (kmax < 1) throw std::invalid_argument("greene_invariants: kmax must be >= 1");
  const Word pw = strip_zeros(w);
  const Partition sh = rs_shape(pw);
  const Partition co = sh.conjugate();
  GreeneTable t;
  t.lis.resize(kmax);
  t.lds.resize(kmax);
  long a = 0, b = 0;
  for (int k = 1; k <= kmax; ++k) {
    a += sh.row(k);
    b += co.row(k);
    t.lis[k - 1] = a;
    t.lds[k - 1] = b;
  }
  return t;
}

// LIS_k of a long word without building the full tableau: row insertion
// truncated to the first k rows (rows below never feed back into rows above).
inline long lis_k(const Word& w, int k) {
  if (k < 1) throw std::invalid_argument("lis_k: k must be >= 1");
  std::vector<std::vector<int>> rows(k);
  long total = 0;
  for (int x0 : w) {
    if (x0 == 0) continue;
    int x = x0;
    bool placed = false;
    for (int r = 0; r < k; ++r) {
      auto& row = rows[r];
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        placed = true;
        break;
      }
      std::swap(*it, x);
    }
    if (placed) ++total;
  }
  return total;
}

inline long lis_1(const Word& w) { return lis_k(w, 1); }

// Strictly decreasing analog; for permutations LDS_k(w) = LIS_k(reverse(w)).
inline long lds_k_permutation(const Permutation& s, int k) {
  Word rev(s.one_line().rbegin(), s.one_line().rend());
  return lis_k(rev, k);
}

namespace detail {

// Exhaustive Greene oracle. Letters are assigned left to right to one of k
// subsequence slots keyed by their last letter. Among slot multisets with the
// same count, a pointwise more permissive one can absorb everything a less
// permissive one can, so it suffices to try skipping the letter or bumping the
// single most constrained compatible slot. The slot multiset is memoized by
// its value-count vector: a dense table for small alphabets (the exhaustive
// sweeps), a hash map otherwise.
class GreeneSearch {
 public:
  GreeneSearch(const Word& letters, int k, bool increasing) : k_(k), incr_(increasing) {
    std::vector<int> sorted(letters);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    distinct_ = static_cast<int>(sorted.size());
    w_.reserve(letters.size());
    for (int x : letters) {
      int r = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin());
      w_.push_back(r + 1);  // ranks 1..distinct; 0 and distinct+1 are sentinels
    }
    // slot values live in {0..distinct} (incr) or {1..distinct+1} (decr):
    // at most 5 distinct slot values when the alphabet has at most 4 letters
    flat_ = distinct_ <= 4 && k_ <= 8;
    if (flat_) {
      if (flat_table().size() < kFlatSize) flat_table().assign(kFlatSize, {0, 0});
      gen_ = ++generation();  // entries from other searches never match
    }
  }

  long run() {
    // slot-value indexes go up to distinct_ + 1 <= 13 under the length cap
    std::vector<int> counts(14, 0);
    counts[slot_index(incr_ ? 0 : distinct_ + 1)] = k_;
    return dfs(0, counts);
  }

 private:
  static constexpr std::size_t kFlatSize = 13u * 9 * 9 * 9 * 9 * 9;  // pos x counts base 9

  struct FlatEntry {
    std::uint32_t gen;
    std::int16_t value;
  };
  static std::vector<FlatEntry>& flat_table() {
    static thread_local std::vector<FlatEntry> table;
    return table;
  }
  static std::uint32_t& generation() {
    static thread_local std::uint32_t gen = 0;
    return gen;
  }

  int slot_index(int value) const { return incr_ ? value : value - 1; }

  long dfs(std::size_t pos, std::vector<int>& counts) {
    if (pos == w_.size()) return 0;
    std::size_t flat_key = 0;
    std::uint64_t map_key = 0;
    if (flat_) {
      flat_key = pos;
      for (int i = 0; i < 5; ++i) flat_key = flat_key * 9 + counts[i];
      const FlatEntry e = flat_table()[flat_key];
      if (e.gen == gen_) return e.value;
    } else {
      // 4 bits per count (counts <= k <= 12) plus the position: 60 bits
      map_key = pos;
      for (int i = 0; i < 14; ++i)
        map_key = (map_key << 4) | static_cast<std::uint64_t>(counts[i]);
      auto it = memo_.find(map_key);
      if (it != memo_.end()) return it->second;
    }

    long best = dfs(pos + 1, counts);  // skip w_[pos]
    const int v = w_[pos];
    int chosen = -1;
    if (incr_) {
      // largest slot value <= v (nondecreasing subsequences)
      for (int val = v; val >= 0; --val)
        if (counts[slot_index(val)] > 0) {
          chosen = val;
          break;
        }
    } else {
      // smallest slot value > v (strictly decreasing subsequences)
      for (int val = v + 1; val <= distinct_ + 1; ++val)
        if (counts[slot_index(val)] > 0) {
          chosen = val;
          break;
        }
    }
    if (chosen >= 0 && chosen != v) {
      counts[slot_index(chosen)] -= 1;
      counts[slot_index(v)] += 1;
      best = std::max(best, 1 + dfs(pos + 1, counts));
      counts[slot_index(chosen)] += 1;
      counts[slot_index(v)] -= 1;
    } else if (chosen == v) {
      best = std::max(best, 1 + dfs(pos + 1, counts));
    }

    if (flat_)
      flat_table()[flat_key] = {gen_, static_cast<std::int16_t>(best)};
    else
      memo_.emplace(map_key, best);
    return best;
  }

  Word w_;
  int k_;
  bool incr_;
  int distinct_ = 0;
  bool flat_ = false;
  std::uint32_t gen_ = 0;
  std::unordered_map<std::uint64_t, long> memo_;
};

}  // namespace detail

inline constexpr std::size_t kGreeneBruteforceCap = 12;

// Exact LIS_k by exhaustive maximization over k-tuples of nondecreasing
// subsequences. Oracle only; capped input length.
inline long greene_bruteforce(const Word& w, int k) {
  const Word pw = strip_zeros(w);
  if (pw.size() > kGreeneBruteforceCap)
    throw std::length_error("greene_bruteforce: word longer than cap");
  if (k < 1) throw std::invalid_argument("greene_bruteforce: k must be >= 1");
  k = std::min<int>(k, static_cast<int>(pw.size()));
  if (k == 0) return 0;
  return detail::GreeneSearch(pw, k, true).run();
}

inline long greene_bruteforce_decreasing(const Word& w, int k) {
  const Word pw = strip_zeros(w);
  if (pw.size() > kGreeneBruteforceCap)
    throw std::length_error("greene_bruteforce: word longer than cap");
  if (k < 1) throw std::invalid_argument("greene_bruteforce: k must be >= 1");
  k = std::min<int>(k, static_cast<int>(pw.size()));
  if (k == 0) return 0;
  return detail::GreeneSearch(pw, k, false).run();
}

}  // namespace plab
