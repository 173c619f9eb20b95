#include <catch2/catch_amalgamated.hpp>

#include "plab/blocks.hpp"
#include "plab/greene.hpp"
#include "plab/knuth.hpp"
#include "plab/rng.hpp"

using namespace plab;

namespace {

Word random_word(int len, int letters, Rng& rng) {
  Word w(len);
  for (int& x : w) x = static_cast<int>(rng.below(letters)) + 1;
  return w;
}

BlockArray random_blocks(int ell, int r, int entry_cap, Rng& rng) {
  BlockArray b(ell, r);
  for (int i = 1; i <= ell; ++i)
    for (int k = 0; k <= r; ++k) b.at(i, k) = static_cast<int>(rng.below(entry_cap + 1));
  return b;
}

bool next_word(Word& w, int letters) {
  for (std::size_t i = w.size(); i-- > 0;) {
    if (w[i] < letters) {
      ++w[i];
      return true;
    }
    w[i] = 1;
  }
  return false;
}

}  // namespace

TEST_CASE("blocks_encode unrolls the definition") {
  BlockArray b(1, 2);
  b.at(1, 0) = 1;
  b.at(1, 1) = 2;
  b.at(1, 2) = 1;
  CHECK(blocks_encode(b) == Word{0, 1, 1, 2});
}

TEST_CASE("row word of the insertion tableau") {
  const BlockArray q = row_word({2, 1, 2}, 2);
  // rows of P(2 1 2) are [1,2] and [2]; blocks run from the last row up
  CHECK(q.at(1, 2) == 1);
  CHECK(q.at(1, 1) == 0);
  CHECK(q.at(2, 1) == 1);
  CHECK(q.at(2, 2) == 1);
  CHECK(blocks_encode(q) == Word{2, 1, 2});
  CHECK_THROWS_AS(row_word({3, 1}, 2), std::domain_error);
}

TEST_CASE("row word array satisfies the truncation identity") {
  // q(i, k) from LIS differences of letter-truncated words, exhaustively
  for (int len = 1; len <= 5; ++len) {
    Word w(len, 1);
    do {
      const int r = 3;
      const BlockArray q = row_word(w, r);
      for (int i = 1; i <= r; ++i) {
        for (int k = 1; k <= r; ++k) {
          Word wk, wk1;
          for (int x : w) {
            if (x <= k) wk.push_back(x);
            if (x <= k - 1) wk1.push_back(x);
          }
          const int depth = r - i + 1;
          const long lis_k_cur = greene_bruteforce(wk, depth);
          const long lis_k_prev = depth >= 2 ? greene_bruteforce(wk, depth - 1) : 0;
          const long lis_k1_cur = greene_bruteforce(wk1, depth);
          const long lis_k1_prev = depth >= 2 ? greene_bruteforce(wk1, depth - 1) : 0;
          REQUIRE(q.at(i, k) == lis_k_cur - lis_k1_cur - lis_k_prev + lis_k1_prev);
        }
      }
    } while (next_word(w, 3));
  }
}

TEST_CASE("row word is Knuth equivalent to the original") {
  Rng rng(808);
  for (int trial = 0; trial < 200; ++trial) {
    const Word w = random_word(1 + static_cast<int>(rng.below(8)), 4, rng);
    CHECK(knuth_equivalent(w, blocks_encode(row_word(w, 4))));
  }
}

TEST_CASE("delta distance worked values") {
  BlockArray a(1, 2), b(1, 2);
  CHECK(delta_distance(a, b) == 0);
  b.at(1, 2) = 1;
  CHECK(delta_distance(a, b) == 2);  // weight k (8k^2)^0

  BlockArray c(2, 2), d(2, 2);
  d.at(1, 2) = 1;
  CHECK(delta_distance(c, d) == 64);  // weight 2 * (8*4)^1

  BlockArray e(2, 3);
  CHECK_THROWS_AS(delta_distance(a, e), std::invalid_argument);

  // zero iff the positive-letter entries agree; zeros may differ
  BlockArray f(2, 2), g(2, 2);
  f.at(1, 0) = 3;
  CHECK(delta_distance(f, g) == 0);
}

TEST_CASE("array dynamics match word dynamics") {
  Rng rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const int ell = 1 + static_cast<int>(rng.below(3));
    const int r = 1 + static_cast<int>(rng.below(3));
    BlockArray b = random_blocks(ell, r, 4, rng);
    const int k = static_cast<int>(rng.below(r + 3));
    Word expected = blocks_encode(b);
    const int word_res = apply_letter_inplace(expected, k);
    const int block_res = apply_letter_blocks_inplace(b, k);
    REQUIRE(blocks_encode(b) == expected);
    REQUIRE(word_res == block_res);
  }
}

TEST_CASE("delta never grows under the inverse dynamics") {
  Rng rng(90125);
  for (int trial = 0; trial < 2000; ++trial) {
    const int ell = 1 + static_cast<int>(rng.below(3));
    const int r = 1 + static_cast<int>(rng.below(3));
    BlockArray a = random_blocks(ell, r, 4, rng);
    BlockArray b = random_blocks(ell, r, 4, rng);
    long long dist = delta_distance(a, b);
    const Word applied = random_word(static_cast<int>(rng.below(7)), r + 1, rng);
    for (int k : applied) {
      apply_letter_blocks_inplace(a, k);
      apply_letter_blocks_inplace(b, k);
      const long long next = delta_distance(a, b);
      REQUIRE(next <= dist);
      dist = next;
    }
  }
}

TEST_CASE("distance bound between block words is controlled by delta") {
  Rng rng(31415);
  for (int trial = 0; trial < 40; ++trial) {
    const int ell = 1 + static_cast<int>(rng.below(2));
    const int r = 1 + static_cast<int>(rng.below(2));
    const BlockArray a = random_blocks(ell, r, 3, rng);
    const BlockArray b = random_blocks(ell, r, 3, rng);
    CHECK(fomin_distance_bound(blocks_encode(a), blocks_encode(b), 3, r + 1) <=
          delta_distance(a, b));
  }
}

TEST_CASE("knuth neighbors on the canonical patterns") {
  CHECK(knuth_neighbors({2, 1, 3}).count({2, 3, 1}) == 1);
  CHECK(knuth_neighbors({1, 3, 2}).count({3, 1, 2}) == 1);
  CHECK(knuth_neighbors({1, 2, 3}).empty());
  // equal-letter tie: 2 2 1 <-> 2 1 2 via the j i k pattern with j = k = 2
  CHECK(knuth_neighbors({2, 2, 1}).count({2, 1, 2}) == 1);
}

TEST_CASE("knuth equivalence via tableaux and via BFS agree") {
  CHECK(knuth_equivalent({2, 1, 3}, {2, 3, 1}));
  CHECK(knuth_equivalent({1, 2}, {1, 2}));
  CHECK_FALSE(knuth_equivalent({1, 2}, {2, 1}));

  Rng rng(27182);
  for (int trial = 0; trial < 60; ++trial) {
    const int len = 1 + static_cast<int>(rng.below(6));
    const Word w = random_word(len, 3, rng);
    const Word w2 = random_word(len, 3, rng);
    const bool by_tableau = knuth_equivalent(w, w2);
    const bool by_bfs = knuth_class_bfs(w).count(w2) == 1;
    REQUIRE(by_tableau == by_bfs);
  }
}

TEST_CASE("knuth equivalent words are indistinguishable by the inverse dynamics") {
  Rng rng(115);
  int found = 0;
  for (int trial = 0; trial < 40 || found < 10; ++trial) {
    const Word w = random_word(1 + static_cast<int>(rng.below(6)), 4, rng);
    for (const Word& nb : knuth_neighbors(w)) {
      ++found;
      REQUIRE(fomin_distance_bound(w, nb, 3, 4) == 0);
      break;
    }
    if (trial > 400) break;
  }
  REQUIRE(found >= 10);
}

TEST_CASE("distance bound to the decreasing reordering obeys the eta bound") {
  Rng rng(4444);
  for (int trial = 0; trial < 25; ++trial) {
    const int r = 1 + static_cast<int>(rng.below(3));
    const Word w = random_word(1 + static_cast<int>(rng.below(7)), r, rng);
    std::vector<long> gamma(r + 1, 0);
    for (int x : w) ++gamma[x];
    Word ord;
    for (int k = r; k >= 1; --k) ord.insert(ord.end(), gamma[k], k);

    long eta_max = 0;
    for (int k = 1; k <= r; ++k) {
      std::vector<long> top(gamma.begin() + 1, gamma.begin() + k + 1);
      std::sort(top.rbegin(), top.rend());
      Word wk;
      for (int x : w)
        if (x <= k) wk.push_back(x);
      long acc = 0;
      for (int i = 1; i <= r; ++i) {
        acc += (i <= k) ? top[i - 1] : 0;
        eta_max = std::max(eta_max, std::abs(acc - greene_bruteforce(wk, i)));
      }
    }
    long long cap = 4LL * r;
    for (int e = 0; e < r; ++e) cap *= 8LL * r * r;
    CHECK(fomin_distance_bound(w, ord, 3, r) <= cap * std::max<long>(eta_max, 0));
  }
}
