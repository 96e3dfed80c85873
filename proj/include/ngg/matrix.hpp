#pragma once

#include <stdexcept>
#include <vector>

#include "ngg/rational.hpp"

namespace ngg {

// Dense matrix of exact rationals. Desk scale: everything here is at most a
// few hundred rows, so no sparsity or blocking.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix size");
  }

  static RatMatrix identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rat& at(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }

  RatMatrix transposed() const {
    RatMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  bool is_zero() const {
    for (const Rat& x : data_)
      if (x != 0) return false;
    return true;
  }

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    RatMatrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const Rat& aik = a.at(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
      }
    return c;
  }

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

}  // namespace ngg
