#include <catch2/catch_amalgamated.hpp>

#include "plab/fomin.hpp"
#include "plab/greene.hpp"
#include "plab/tableau.hpp"
#include "plab/word.hpp"

using namespace plab;

TEST_CASE("perm_from_points ranks by coordinates") {
  // first point from the left is the fourth from the bottom
  std::vector<Point> pts{{0.1, 0.8}, {0.2, 0.2}, {0.3, 0.6}, {0.4, 0.4}, {0.5, 0.95}};
  const Permutation s = perm_from_points(pts);
  REQUIRE(s(1) == 4);
  REQUIRE(s.one_line() == std::vector<int>{4, 1, 3, 2, 5});

  REQUIRE(perm_from_points({{0.1, 0.1}, {0.2, 0.2}, {0.3, 0.3}}).one_line() ==
          std::vector<int>{1, 2, 3});
  REQUIRE(perm_from_points({{0.1, 0.9}, {0.2, 0.5}, {0.3, 0.1}}).one_line() ==
          std::vector<int>{3, 2, 1});

  CHECK_THROWS_AS(perm_from_points({{0.5, 0.1}, {0.5, 0.2}}), std::invalid_argument);
  CHECK_THROWS_AS(perm_from_points({{0.1, 0.5}, {0.2, 0.5}}), std::invalid_argument);
}

TEST_CASE("row insertion reproduces the reference tableaux") {
  const Word w{4, 2, 7, 6, 1, 3, 5};
  const auto [p, q] = rs_tableaux(w);
  CHECK(p.rows == std::vector<std::vector<int>>{{1, 3, 5}, {2, 6}, {4, 7}});
  CHECK(q.rows == std::vector<std::vector<int>>{{1, 3, 7}, {2, 4}, {5, 6}});
  CHECK(p.shape().str() == "3,2,2");

  const TableauPair pair = rs_correspondence(w);
  CHECK(pair.shape() == p.shape());
  CHECK(pair.p.final_shape() == pair.q.final_shape());
  CHECK(pair.q.standard());
  CHECK(pair.p.standard());  // permutations give standard insertion chains
  CHECK(filling_from_growth(pair.p) == p);

  SECTION("empty word") {
    const TableauPair empty = rs_correspondence({});
    CHECK(empty.q.chain.size() == 1);
    CHECK(empty.shape() == Partition{});
  }

  SECTION("general word is semistandard") {
    const TableauPair g = rs_correspondence({2, 1, 2});
    CHECK(g.p.valid());
    CHECK_FALSE(g.p.standard());
    CHECK(filling_from_growth(g.p).rows == std::vector<std::vector<int>>{{1, 2}, {2}});
  }

  SECTION("zero letters are rejected") {
    CHECK_THROWS_AS(rs_correspondence({1, 0, 2}), std::invalid_argument);
  }
}

TEST_CASE("shape via hand insertion cross-checked against the edge grid") {
  const Permutation s({3, 5, 1, 4, 2});
  CHECK(rs_shape(s.word()).str() == "2,2,1");
  const LambdaGrid grid(s);
  CHECK(grid.shape_at(5, 5).str() == "2,2,1");
}

TEST_CASE("greene invariants from the shape") {
  const Word w{4, 2, 7, 6, 1, 3, 5};
  const GreeneTable t = greene_invariants(w, 3);
  CHECK(t.lis == std::vector<long>{3, 5, 7});
  CHECK(t.lds == std::vector<long>{3, 6, 7});

  SECTION("identity") {
    const GreeneTable id = greene_invariants({1, 2, 3, 4, 5}, 2);
    CHECK(id.lis[0] == 5);
    CHECK(id.lds[0] == 1);
  }

  SECTION("repeated letters: nondecreasing vs strictly decreasing") {
    const GreeneTable r = greene_invariants({2, 2, 1, 1}, 2);
    CHECK(r.lis == std::vector<long>{2, 4});
    CHECK(r.lds == std::vector<long>{2, 4});
    CHECK(greene_bruteforce({2, 2, 1, 1}, 1) == 2);
    CHECK(greene_bruteforce_decreasing({2, 2, 1, 1}, 1) == 2);
  }

  SECTION("zero letters are ignored") {
    const GreeneTable z = greene_invariants({0, 2, 0, 1, 0}, 2);
    CHECK(z.lis == std::vector<long>{1, 2});
  }
}

TEST_CASE("greene brute force basics") {
  CHECK(greene_bruteforce({4, 2, 7, 6, 1, 3, 5}, 2) == 5);
  CHECK(greene_bruteforce({3, 1, 2}, 1) == 2);
  // k at least the word length: everything positive fits
  CHECK(greene_bruteforce({0, 3, 1, 0, 2}, 5) == 3);
  Word too_long(13, 1);
  CHECK_THROWS_AS(greene_bruteforce(too_long, 1), std::length_error);
}

TEST_CASE("truncated insertion matches full-shape prefix sums") {
  const Word w{4, 2, 7, 6, 1, 3, 5, 2, 2, 6};
  const GreeneTable t = greene_invariants(w, 4);
  for (int k = 1; k <= 4; ++k) CHECK(lis_k(w, k) == t.lis[k - 1]);
}

TEST_CASE("lambda grid values and regularity") {
  SECTION("column of the full word") {
    const LambdaGrid g(Permutation({3, 5, 1, 4, 2}));
    CHECK(g.value(5, 5, 1) == 2);
    CHECK(g.value(5, 5, 2) == 2);
    CHECK(g.value(5, 5, 3) == 1);
    for (int j = 0; j <= 5; ++j)
      for (int k = 1; k <= 5; ++k) CHECK(g.value(0, j, k) == 0);
  }

  SECTION("P-tableau diagrams of the reference permutation") {
    const LambdaGrid g(Permutation({4, 2, 7, 6, 1, 3, 5}));
    // 4th diagram of the P-tableau: letters at most 4
    CHECK(g.shape_at(7, 4).str() == "2,1,1");
    // 4th diagram of the Q-tableau: first 4 letters
    CHECK(g.shape_at(4, 7).str() == "2,2");
  }

  SECTION("border columns encode the insertion and recording chains") {
    const Permutation s({3, 5, 1, 4, 2});
    const LambdaGrid g(s);
    const TableauPair pair = rs_correspondence(s.word());
    for (int k = 0; k <= 5; ++k) {
      CHECK(g.shape_at(5, k) == pair.p.chain[k]);
      CHECK(g.shape_at(k, 5) == pair.q.chain[k]);
    }
  }

  SECTION("monotone and 1-Lipschitz in each direction") {
    const Permutation s({4, 2, 7, 6, 1, 3, 5});
    const LambdaGrid g(s);
    for (int i = 0; i < 7; ++i) {
      for (int j = 0; j <= 7; ++j) {
        long total_step = 0;
        for (int k = 1; k <= 7; ++k) {
          const int d = g.value(i + 1, j, k) - g.value(i, j, k);
          CHECK((d == 0 || d == 1));
          total_step += d;
        }
        CHECK(total_step <= 1);
      }
    }
    for (int j = 0; j < 7; ++j) {
      for (int i = 0; i <= 7; ++i) {
        long total_step = 0;
        for (int k = 1; k <= 7; ++k) {
          const int d = g.value(i, j + 1, k) - g.value(i, j, k);
          CHECK((d == 0 || d == 1));
          total_step += d;
        }
        CHECK(total_step <= 1);
      }
    }
  }
}

TEST_CASE("serialization helpers") {
  CHECK(format_word(parse_word("3 2 2 1")) == "3 2 2 1");
  CHECK_THROWS_AS(parse_word("1 x 2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("1 -2"), std::invalid_argument);
  CHECK(Partition({3, 2, 2}).str() == "3,2,2");
  CHECK(Partition({3, 2, 2}).conjugate().str() == "3,3,1");

  const LambdaGrid grid{Permutation({2, 1})};
  std::ostringstream csv;
  grid.write_csv(csv);
  CHECK(csv.str() ==
        "i,j,k,value\n"
        "1,2,1,1\n"
        "2,1,1,1\n"
        "2,2,1,1\n"
        "2,2,2,1\n");
}
