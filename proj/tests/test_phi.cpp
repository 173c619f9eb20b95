#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>

#include "plab/fomin.hpp"
#include "plab/phi.hpp"
#include "plab/rng.hpp"

using namespace plab;

TEST_CASE("phi on the closed-form cases") {
  CHECK(phi_discrete({3}, {2}) == 3);
  CHECK(phi_discrete({2, 1}, {1, 2}) == 2);
  CHECK(phi_discrete({0, 0}, {0, 0}) == 0);
  CHECK(phi_continuous({3.0}, {2.0}) == 3.0);
  CHECK(phi_continuous({1.0, 0.5}, {0.5, 1.0}) == 1.0);
  CHECK_THROWS_AS(phi_continuous({-1.0}, {0.0}), std::domain_error);
}

TEST_CASE("r = 1 and r = 2 closed forms hold identically") {
  Rng rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    const double a1 = rng.uniform() * 5, b1 = rng.uniform() * 5;
    // (a-b)+b can differ from a by an ulp in floating point
    CHECK(std::fabs(phi_continuous({a1}, {b1}) - std::max(a1, b1)) <= 1e-12);
    const double a2 = rng.uniform() * 5, b2 = rng.uniform() * 5;
    const double expect = std::max({a1, b1, std::min(a2, b2)});
    CHECK(std::fabs(phi_continuous({a1, a2}, {b1, b2}) - expect) <= 1e-12);
  }
  // exact arithmetic: equality, not closeness
  Rng rng2(32);
  for (int trial = 0; trial < 200; ++trial) {
    const Frac a1(static_cast<int>(rng2.below(40)), 1 + static_cast<int>(rng2.below(7)));
    const Frac a2(static_cast<int>(rng2.below(40)), 1 + static_cast<int>(rng2.below(7)));
    const Frac b1(static_cast<int>(rng2.below(40)), 1 + static_cast<int>(rng2.below(7)));
    const Frac b2(static_cast<int>(rng2.below(40)), 1 + static_cast<int>(rng2.below(7)));
    CHECK(phi_exact({a1}, {b1}) == max(a1, b1));
    CHECK(phi_exact({a1, a2}, {b1, b2}) == max(max(a1, b1), min(a2, b2)));
  }
}

TEST_CASE("continuous extension agrees with the discrete map on integers") {
  // exhaustive r <= 2 with entries <= 4 here; the acceptance suite covers
  // r <= 3 with entries <= 6
  for (long a1 = 0; a1 <= 4; ++a1)
    for (long b1 = 0; b1 <= 4; ++b1) {
      CHECK(phi_continuous({double(a1)}, {double(b1)}) == double(phi_discrete({a1}, {b1})));
      for (long a2 = 0; a2 <= 4; ++a2)
        for (long b2 = 0; b2 <= 4; ++b2)
          CHECK(phi_continuous({double(a1), double(a2)}, {double(b1), double(b2)}) ==
                double(phi_discrete({a1, a2}, {b1, b2})));
    }
}

TEST_CASE("trailing zero padding does not change phi") {
  for (long a1 = 0; a1 <= 3; ++a1)
    for (long a2 = 0; a2 <= 3; ++a2)
      for (long b1 = 0; b1 <= 3; ++b1)
        for (long b2 = 0; b2 <= 3; ++b2)
          CHECK(phi_discrete({a1, a2, 0, 0}, {b1, b2, 0, 0}) ==
                phi_discrete({a1, a2}, {b1, b2}));
}

TEST_CASE("homogeneity") {
  SECTION("exact rational scaling") {
    Rng rng(77);
    for (int trial = 0; trial < 300; ++trial) {
      const int r = 1 + static_cast<int>(rng.below(3));
      std::vector<Frac> a, b;
      for (int i = 0; i < r; ++i) {
        a.emplace_back(static_cast<int>(rng.below(30)), 1 + static_cast<int>(rng.below(5)));
        b.emplace_back(static_cast<int>(rng.below(30)), 1 + static_cast<int>(rng.below(5)));
      }
      const Frac c(1 + static_cast<int>(rng.below(40)), 1 + static_cast<int>(rng.below(4)));
      std::vector<Frac> ca = a, cb = b;
      for (auto& x : ca) x *= c;
      for (auto& x : cb) x *= c;
      REQUIRE(phi_exact(ca, cb) == c * phi_exact(a, b));
    }
  }
  SECTION("floating point scaling within 1e-9") {
    Rng rng(78);
    for (int trial = 0; trial < 300; ++trial) {
      const int r = 1 + static_cast<int>(rng.below(3));
      std::vector<double> a, b;
      for (int i = 0; i < r; ++i) {
        a.push_back(rng.uniform() * 6);
        b.push_back(rng.uniform() * 6);
      }
      const double c = rng.uniform() * 10 + 1e-3;
      std::vector<double> ca = a, cb = b;
      for (auto& x : ca) x *= c;
      for (auto& x : cb) x *= c;
      REQUIRE(std::fabs(phi_continuous(ca, cb) - c * phi_continuous(a, b)) <= 1e-9);
    }
  }
  SECTION("scaling by zero") {
    CHECK(phi_continuous({0.0, 0.0, 0.0}, {0.0, 0.0, 0.0}) == 0.0);
  }
}

TEST_CASE("suffix shift identity") {
  // phi over the suffix (alpha_h.., beta_h..) counts the h's of the full
  // decreasing dynamics
  for (long a1 = 0; a1 <= 3; ++a1)
    for (long a2 = 0; a2 <= 3; ++a2)
      for (long b1 = 0; b1 <= 3; ++b1)
        for (long b2 = 0; b2 <= 3; ++b2)
          for (long a3 = 0; a3 <= 2; ++a3)
            for (long b3 = 0; b3 <= 2; ++b3) {
              const std::vector<long> alpha{a1, a2, a3}, beta{b1, b2, b3};
              Word top, right;
              for (int k = 3; k >= 1; --k) {
                top.insert(top.end(), alpha[k - 1], k);
                right.insert(right.end(), beta[k - 1], k);
              }
              const Word bottom = fomin_inverse(top, right).bottom;
              for (int h = 1; h <= 3; ++h) {
                const std::vector<long> a_suf(alpha.begin() + (h - 1), alpha.end());
                const std::vector<long> b_suf(beta.begin() + (h - 1), beta.end());
                REQUIRE(phi_discrete(a_suf, b_suf) ==
                        beta[h - 1] + count_letter(bottom, h));
              }
            }
}
