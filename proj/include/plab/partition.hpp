#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace plab {

// Integer partition: weakly decreasing positive row lengths.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i] < 1) throw std::invalid_argument("partition rows must be positive");
      if (i > 0 && rows_[i] > rows_[i - 1])
        throw std::invalid_argument("partition rows must be weakly decreasing");
    }
  }

  int num_rows() const { return static_cast<int>(rows_.size()); }
  // 1-based row length, 0 beyond the last row.
  int row(int k) const {
    if (k < 1 || k > num_rows()) return 0;
    return rows_[k - 1];
  }
  long total() const {
    long t = 0;
    for (int r : rows_) t += r;
    return t;
  }
  const std::vector<int>& rows() const { return rows_; }

  Partition conjugate() const {
    std::vector<int> cols;
    if (!rows_.empty()) {
      cols.assign(rows_[0], 0);
      for (int r : rows_)
        for (int c = 0; c < r; ++c) ++cols[c];
    }
    return Partition(std::move(cols));
  }

  // Adds one box at the end of row k (1-based), growing a new row if needed.
  Partition with_box(int k) const {
    std::vector<int> r = rows_;
    if (k == num_rows() + 1)
      r.push_back(1);
    else if (k >= 1 && k <= num_rows())
      r[k - 1] += 1;
    else
      throw std::invalid_argument("with_box: row out of range");
    return Partition(std::move(r));
  }

  bool contains(const Partition& other) const {
    for (int k = 1; k <= other.num_rows(); ++k)
      if (row(k) < other.row(k)) return false;
    return true;
  }

  std::string str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i) os << ',';
      os << rows_[i];
    }
    return os.str();
  }

  friend bool operator==(const Partition& a, const Partition& b) { return a.rows_ == b.rows_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

 private:
  std::vector<int> rows_;
};

// If b = a plus exactly one box, returns its row index; otherwise 0.
inline int box_added_row(const Partition& a, const Partition& b) {
  int row = 0, boxes = 0;
  int top = std::max(a.num_rows(), b.num_rows());
  for (int k = 1; k <= top; ++k) {
    int d = b.row(k) - a.row(k);
    if (d < 0 || d > 1) return 0;
    if (d == 1) {
      ++boxes;
      row = k;
    }
  }
  return boxes == 1 ? row : 0;
}

// A tableau encoded as an increasing chain of partitions, chain[0] empty.
// Standard tableaux grow one box per step; semistandard insertion tableaux of
// general words grow by horizontal strips, one step per letter value.
struct GrowthSequence {
  std::vector<Partition> chain;

  int steps() const { return static_cast<int>(chain.size()) - 1; }
  const Partition& final_shape() const { return chain.back(); }

  bool valid() const {
    if (chain.empty() || chain.front().num_rows() != 0) return false;
    for (std::size_t t = 1; t < chain.size(); ++t) {
      if (!chain[t].contains(chain[t - 1])) return false;
      // horizontal strip: no two added boxes in the same column
      const Partition conj_prev = chain[t - 1].conjugate();
      const Partition conj_cur = chain[t].conjugate();
      for (int c = 1; c <= conj_cur.num_rows(); ++c)
        if (conj_cur.row(c) - conj_prev.row(c) > 1) return false;
    }
    return true;
  }

  bool standard() const {
    if (!valid()) return false;
    for (std::size_t t = 1; t < chain.size(); ++t)
      if (chain[t].total() != chain[t - 1].total() + 1) return false;
    return true;
  }
};

struct TableauPair {
  GrowthSequence p;  // insertion tableau, chain indexed by letter value
  GrowthSequence q;  // recording tableau, chain indexed by insertion step

  const Partition& shape() const { return q.chain.back(); }
};

}  // namespace plab
