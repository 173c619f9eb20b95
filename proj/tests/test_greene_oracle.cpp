#include <catch2/catch_amalgamated.hpp>

#include "plab/greene.hpp"
#include "plab/rng.hpp"
#include "plab/word.hpp"

using namespace plab;

namespace {

// enumerate words over {1..letters} of exactly the given length
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

Permutation random_permutation(int n, Rng& rng) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  for (int i = n - 1; i > 0; --i)
    std::swap(v[i], v[static_cast<int>(rng.below(i + 1))]);
  return Permutation(std::move(v));
}

}  // namespace

TEST_CASE("shape-derived invariants equal brute force on small words") {
  // exhaustive over {1..3} up to length 6 here; the acceptance suite runs the
  // full {1..4} length-8 sweep
  for (int len = 0; len <= 6; ++len) {
    Word w(len, 1);
    do {
      const GreeneTable t = greene_invariants(w, std::max(1, len));
      for (int k = 1; k <= std::max(1, len); ++k) {
        REQUIRE(t.lis[k - 1] == greene_bruteforce(w, k));
        REQUIRE(t.lds[k - 1] == greene_bruteforce_decreasing(w, k));
      }
    } while (len > 0 && next_word(w, 3));
  }
}

TEST_CASE("row and column increments are conjugate for permutations") {
  Rng rng(20240811);
  for (int trial = 0; trial < 50; ++trial) {
    const Permutation s = random_permutation(30, rng);
    const GreeneTable t = greene_invariants(s.word(), 30);
    std::vector<int> row_inc, col_inc;
    for (int k = 1; k <= 30; ++k) {
      const long a = t.lis[k - 1] - (k >= 2 ? t.lis[k - 2] : 0);
      const long b = t.lds[k - 1] - (k >= 2 ? t.lds[k - 2] : 0);
      if (a > 0) row_inc.push_back(static_cast<int>(a));
      if (b > 0) col_inc.push_back(static_cast<int>(b));
    }
    REQUIRE(Partition(row_inc).conjugate() == Partition(col_inc));
  }
}

TEST_CASE("erdos-szekeres product bound on random permutations") {
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(60));
    const Permutation s = random_permutation(n, rng);
    REQUIRE(lis_k(s.word(), 1) * lds_k_permutation(s, 1) >= n);
  }
}
