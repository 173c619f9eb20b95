#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace plab {

// A word is a finite sequence of nonnegative integer letters. Letter 0 is
// meaningful in edge-label words and ignored by subsequence functionals.
using Word = std::vector<int>;

inline long count_letter(const Word& w, int h) {
  return static_cast<long>(std::count(w.begin(), w.end(), h));
}

inline int max_letter(const Word& w) {
  int m = 0;
  for (int x : w) m = std::max(m, x);
  return m;
}

inline Word strip_zeros(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int x : w)
    if (x != 0) out.push_back(x);
  return out;
}

inline std::string format_word(const Word& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << w[i];
  }
  return os.str();
}

inline Word parse_word(const std::string& text) {
  Word w;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size() || v < 0) throw std::invalid_argument(tok);
      w.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad word token: '" + tok + "'");
    }
  }
  return w;
}

// A permutation of {1..n} in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
    std::vector<char> seen(one_line_.size() + 1, 0);
    for (int v : one_line_) {
      if (v < 1 || v > static_cast<int>(one_line_.size()) || seen[v])
        throw std::invalid_argument("not a permutation of 1..n");
      seen[v] = 1;
    }
  }

  int size() const { return static_cast<int>(one_line_.size()); }
  int operator()(int i) const { return one_line_[i - 1]; }  // 1-based
  const std::vector<int>& one_line() const { return one_line_; }
  Word word() const { return one_line_; }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.one_line_ == b.one_line_;
  }

 private:
  std::vector<int> one_line_;
};

inline Permutation identity_permutation(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return Permutation(std::move(v));
}

struct Point {
  double x = 0;
  double y = 0;
};

// sigma(i) = j iff the point with i-th lowest x-coordinate has j-th lowest
// y-coordinate. Duplicate coordinates make the permutation ill-defined.
inline Permutation perm_from_points(const std::vector<Point>& pts) {
  const int n = static_cast<int>(pts.size());
  std::vector<int> by_x(n), rank_y(n), order_y(n);
  for (int i = 0; i < n; ++i) by_x[i] = order_y[i] = i;
  std::sort(by_x.begin(), by_x.end(), [&](int a, int b) { return pts[a].x < pts[b].x; });
  std::sort(order_y.begin(), order_y.end(), [&](int a, int b) { return pts[a].y < pts[b].y; });
  for (int r = 0; r < n; ++r) rank_y[order_y[r]] = r + 1;
  for (int i = 1; i < n; ++i) {
    if (pts[by_x[i - 1]].x == pts[by_x[i]].x)
      throw std::invalid_argument("perm_from_points: duplicate x-coordinate");
    if (pts[order_y[i - 1]].y == pts[order_y[i]].y)
      throw std::invalid_argument("perm_from_points: duplicate y-coordinate");
  }
  std::vector<int> one_line(n);
  for (int i = 0; i < n; ++i) one_line[i] = rank_y[by_x[i]];
  return Permutation(std::move(one_line));
}

}  // namespace plab
