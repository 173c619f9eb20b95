#pragma once

#include <stdexcept>
#include <vector>

#include "plab/fomin.hpp"
#include "plab/fraction.hpp"
#include "plab/word.hpp"

namespace plab {

// phi on integer vectors: beta_1 plus the number of 1's left after applying
// the decreasing word r^(beta_r)...1^(beta_1) to r^(alpha_r)...1^(alpha_1).
// Trailing zeros on both arguments do not change the value.
inline long phi_discrete(const std::vector<long>& alpha, const std::vector<long>& beta) {
  if (alpha.size() != beta.size() || alpha.empty())
    throw std::invalid_argument("phi_discrete: vectors must have equal positive length");
  const int r = static_cast<int>(alpha.size());
  Word top, right;
  for (int k = r; k >= 1; --k) {
    if (alpha[k - 1] < 0 || beta[k - 1] < 0)
      throw std::domain_error("phi_discrete: entries must be nonnegative");
    top.insert(top.end(), alpha[k - 1], k);
    right.insert(right.end(), beta[k - 1], k);
  }
  const InversePair f = fomin_inverse(top, right);
  return beta[0] + count_letter(f.bottom, 1);
}

namespace detail {

template <class T>
T vmin(const T& x, const T& y) {
  return x < y ? x : y;
}
template <class T>
T vmax(const T& x, const T& y) {
  return x < y ? y : x;
}

// One-block step: the bottom word of two single blocks 0^(a_0)...r^(a_r) and
// 0^(b_0)...r^(b_r) is again one block, with multiplicities
//   ( a_0 + a_1/\b_1 , (a_1-b_1)^+ + a_2/\b_2 , ... , (a_r-b_r)^+ ).
// Only plus, minus, min and max appear, so the same formula extends the
// integer dynamics to nonnegative reals and is positively homogeneous.
template <class T>
std::vector<T> varphi_block(const std::vector<T>& a, const std::vector<T>& b) {
  const std::size_t r = a.size() - 1;
  std::vector<T> out(r + 1);
  for (std::size_t k = 0; k <= r; ++k) {
    T head = (k == 0) ? a[0] : vmax<T>(a[k] - b[k], T(0));
    out[k] = (k < r) ? head + vmin<T>(a[k + 1], b[k + 1]) : head;
  }
  return out;
}

// Applies one block b to an array of blocks: block i leaves as
// varphi(q_i, b_cur) and passes varphi(b_cur, q_i) on to the next block.
template <class T>
std::vector<std::vector<T>> fbot_blocks_real(std::vector<std::vector<T>> q, std::vector<T> b) {
  for (std::size_t i = 0; i < q.size(); ++i) {
    std::vector<T> pass = varphi_block<T>(b, q[i]);
    q[i] = varphi_block<T>(q[i], b);
    b = std::move(pass);
  }
  return q;
}

template <class T>
T phi_generic(const std::vector<T>& alpha, const std::vector<T>& beta) {
  if (alpha.size() != beta.size() || alpha.empty())
    throw std::invalid_argument("phi: vectors must have equal positive length");
  const std::size_t r = alpha.size();
  for (std::size_t k = 0; k < r; ++k)
    if (alpha[k] < T(0) || beta[k] < T(0)) throw std::domain_error("phi: negative entry");
  // The decreasing word r^(a_r)...1^(a_1) as r single-letter blocks.
  auto as_blocks = [r](const std::vector<T>& entries) {
    std::vector<std::vector<T>> q(r, std::vector<T>(r + 1, T(0)));
    for (std::size_t i = 0; i < r; ++i) q[i][r - i] = entries[r - i - 1];
    return q;
  };
  std::vector<std::vector<T>> qa = as_blocks(alpha);
  const std::vector<std::vector<T>> qb = as_blocks(beta);
  for (const auto& block : qb) qa = fbot_blocks_real<T>(std::move(qa), block);
  T ones = beta[0];
  for (const auto& block : qa) ones = ones + block[1];
  return ones;
}

}  // namespace detail

// Continuous extension of phi to nonnegative real vectors via the block
// recursion; agrees with phi_discrete on integer vectors and is positively
// homogeneous.
inline double phi_continuous(const std::vector<double>& alpha, const std::vector<double>& beta) {
  return detail::phi_generic<double>(alpha, beta);
}

// Exact-rational evaluation; homogeneity holds with equality here.
inline Frac phi_exact(const std::vector<Frac>& alpha, const std::vector<Frac>& beta) {
  return detail::phi_generic<Frac>(alpha, beta);
}

}  // namespace plab
